fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter(trireg::cli::LOG_ENV)).init();
    std::process::exit(trireg::cli::run());
}
