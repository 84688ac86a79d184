//! Worker-pool sizing for the data-parallel sweeps.

/// Environment variable overriding the number of sweep workers.
pub const WORKERS_ENV: &str = "TWISTED_N2_WORKERS";

/// Installs a global pool sized from [`WORKERS_ENV`] when it is set to a
/// positive integer. Returns the size used, or `None` for the default.
/// Later calls are no-ops.
pub fn init_from_env() -> Option<usize> {
    let n: usize = std::env::var(WORKERS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)?;
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Some(n)
}
