//! Spec files, corpus sweeps, table caching and report output.

mod cache;
mod modfile;
mod spec;
mod sweep;

pub use cache::{CacheStats, TableCache, CACHE_ENV};
pub use modfile::parse_module;
pub use spec::{parse_spec, GroupSource, GroupSpec};
pub use sweep::{
    load_corpus, render_report, sweep, sweep_specs, table_for, ItemStatus, SweepItem, SweepOptions, SweepResult, TOOL_VERSION,
};
