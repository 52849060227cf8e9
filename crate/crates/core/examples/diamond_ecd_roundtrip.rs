//! Splits L_n into diamonds, reads off the even cycle decomposition of the
//! contracted graph and rebuilds the quintic graph from it.
//!
//! ```text
//! cargo run --example diamond_ecd_roundtrip -- 9
//! ```

use trireg::{
    are_isomorphic, construct_ln, contract_diamonds, extract_ecd, find_diamond_decomposition, synthesize_quintic,
    validate_ecd,
};

fn main() -> trireg::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("n must be a number");
    let g = construct_ln(n)?;
    let dd = find_diamond_decomposition(&g)?.expect("L_n is optimal");
    for (i, d) in dd.diamonds().iter().enumerate() {
        println!("diamond {i}: spoke {:?}, side pair {:?}", d.spoke, d.side);
    }
    let (base, _) = contract_diamonds(&dd);
    println!("contracted graph: {} vertices, {}-regular", base.vertex_count(), base.regularity().unwrap());
    let ecd = extract_ecd(&dd)?;
    print!("{}", ecd.to_text());
    println!("violations: {:?}", validate_ecd(&ecd));
    let h = synthesize_quintic(&ecd)?;
    println!("rebuilt graph isomorphic to L_{n}: {}", are_isomorphic(&g, &h));
    Ok(())
}
