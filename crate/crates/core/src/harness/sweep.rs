//! Corpus sweep: every group against every prime dividing its order.

use std::fmt::Write;
use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::prime_divisors;
use crate::bounds::{bound_verdict, BoundReport, Verdict};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::permcore::PermGroup;

use super::cache::TableCache;
use super::spec::{parse_spec, GroupSpec};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default)]
pub struct SweepOptions {
    pub max_order: Option<u128>,
    pub prime: Option<u64>,
    /// Worker threads; 0 lets rayon choose.
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    Ok,
    Violation,
    Error,
    Resource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepItem {
    pub group: String,
    pub p: u64,
    pub status: ItemStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall time, kept out of serialized output so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub instances: usize,
    pub equalities: usize,
    pub strict: usize,
    pub failures: usize,
    pub errors: usize,
    pub resource_errors: usize,
    /// `(group, p)` where `k_{0,σ}` lies in `S_p` although the Sylow subgroup is not cyclic.
    pub sp_probe_hits: Vec<String>,
    pub tool_version: String,
    pub items: Vec<SweepItem>,
}

impl SweepResult {
    pub fn from_items(mut items: Vec<SweepItem>) -> Self {
        items.sort_by(|a, b| (a.group.as_str(), a.p).cmp(&(b.group.as_str(), b.p)));
        let count = |s: ItemStatus| items.iter().filter(|i| i.status == s).count();
        let verdicts = |v: Verdict| items.iter().filter(|i| i.report.as_ref().is_some_and(|r| r.verdict == v)).count();
        SweepResult {
            instances: items.len(),
            equalities: verdicts(Verdict::Equality),
            strict: verdicts(Verdict::Strict),
            failures: count(ItemStatus::Violation),
            errors: count(ItemStatus::Error),
            resource_errors: count(ItemStatus::Resource),
            sp_probe_hits: items
                .iter()
                .filter(|i| i.report.as_ref().is_some_and(|r| r.sp_probe_hit))
                .map(|i| format!("{} p={}", i.group, i.p))
                .collect(),
            tool_version: TOOL_VERSION.to_string(),
            items,
        }
    }

    /// 0 clean, 2 violation or failed cross-check, 3 resource cap.
    pub fn exit_code(&self) -> i32 {
        if self.failures > 0 {
            2
        } else if self.resource_errors > 0 {
            3
        } else if self.errors > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep result serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let _ = writeln!(out, "{}", render_item(item));
        }
        let _ = writeln!(
            out,
            "instances={} equalities={} strict={} failures={} errors={} resource_errors={}",
            self.instances, self.equalities, self.strict, self.failures, self.errors, self.resource_errors
        );
        for hit in &self.sp_probe_hits {
            let _ = writeln!(out, "NOTE: {hit}: k0s lies in S_p with a non-cyclic Sylow subgroup");
        }
        out
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

/// `A5 p=5 k0s=4 bound=4 EQUALITY [i✓ ii✓ iii✓]`
pub fn render_report(r: &BoundReport) -> String {
    let verdict = match r.verdict {
        Verdict::Equality => "EQUALITY",
        Verdict::Strict => "STRICT",
    };
    format!(
        "{} p={} k0s={} bound={} {} [i{} ii{} iii{}]",
        r.group,
        r.p,
        r.k0_sigma,
        r.bound,
        verdict,
        mark(r.cond_i),
        mark(r.cond_ii),
        mark(r.cond_iii)
    )
}

fn render_item(item: &SweepItem) -> String {
    match (&item.report, &item.error) {
        (Some(r), _) if item.status == ItemStatus::Violation => format!("{} VIOLATION", render_report(r)),
        (Some(r), _) => render_report(r),
        (None, Some(e)) => format!("{} p={} ERROR {e}", item.group, item.p),
        (None, None) => format!("{} p={} ERROR", item.group, item.p),
    }
}

/// Reads every `*.grp` file in `dir`, sorted by file name; group names must be unique.
pub fn load_corpus(dir: &Path) -> Result<Vec<GroupSpec>> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "grp"))
        .collect();
    paths.sort();
    let mut specs: Vec<GroupSpec> = Vec::with_capacity(paths.len());
    for path in paths {
        let text = fs::read_to_string(&path)?;
        let spec = parse_spec(&text).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column,
                message: format!("{}: {message}", path.display()),
            },
            other => Error::Input(format!("{}: {other}", path.display())),
        })?;
        if specs.iter().any(|s| s.name == spec.name) {
            return Err(Error::Input(format!("{}: duplicate group name {}", path.display(), spec.name)));
        }
        specs.push(spec);
    }
    Ok(specs)
}

fn error_item(group: &str, p: u64, e: &Error, elapsed: Duration) -> SweepItem {
    SweepItem {
        group: group.to_string(),
        p,
        status: if e.is_resource() { ItemStatus::Resource } else { ItemStatus::Error },
        report: None,
        error: Some(e.to_string()),
        elapsed,
    }
}

pub fn table_for(spec: &GroupSpec, group: &PermGroup, cache: Option<&TableCache>) -> Result<CharacterTable> {
    match cache {
        Some(c) => c.table(spec, group),
        None => CharacterTable::compute(group),
    }
}

fn sweep_group(spec: &GroupSpec, options: &SweepOptions, cache: Option<&TableCache>) -> Vec<SweepItem> {
    let start = Instant::now();
    let group = match spec.build() {
        Ok(g) => g,
        Err(e) => return vec![error_item(&spec.name, 0, &e, start.elapsed())],
    };
    if options.max_order.is_some_and(|m| group.order() > m) {
        return Vec::new();
    }
    let primes: Vec<u64> = match u64::try_from(group.order()) {
        Ok(n) => prime_divisors(n)
            .into_iter()
            .filter(|&p| options.prime.is_none_or(|q| q == p))
            .collect(),
        Err(_) => {
            let e = Error::Resource(format!("|G| = {} does not fit in 64 bits", group.order()));
            return vec![error_item(&spec.name, 0, &e, start.elapsed())];
        }
    };
    if primes.is_empty() {
        return Vec::new();
    }
    let table = match table_for(spec, &group, cache) {
        Ok(t) => t,
        Err(e) => return primes.iter().map(|&p| error_item(&spec.name, p, &e, start.elapsed())).collect(),
    };
    primes
        .into_iter()
        .map(|p| {
            let t0 = Instant::now();
            match bound_verdict(&spec.name, &table, p) {
                Ok(r) => SweepItem {
                    group: spec.name.clone(),
                    p,
                    status: if r.consistent && r.inequality_holds { ItemStatus::Ok } else { ItemStatus::Violation },
                    report: Some(r),
                    error: None,
                    elapsed: t0.elapsed(),
                },
                Err(e) => error_item(&spec.name, p, &e, t0.elapsed()),
            }
        })
        .collect()
}

pub fn sweep_specs(specs: &[GroupSpec], options: &SweepOptions, cache: Option<&TableCache>) -> Result<SweepResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::Resource(e.to_string()))?;
    let items: Vec<SweepItem> = pool.install(|| {
        specs
            .par_iter()
            .flat_map_iter(|s| sweep_group(s, options, cache))
            .collect()
    });
    Ok(SweepResult::from_items(items))
}

pub fn sweep(dir: &Path, options: &SweepOptions, cache: Option<&TableCache>) -> Result<SweepResult> {
    sweep_specs(&load_corpus(dir)?, options, cache)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_result_json() {
        let r = SweepResult::from_items(Vec::new());
        assert!(r.to_json().starts_with("{\n  \"instances\": 0,"));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn single_report_line() {
        let spec = parse_spec("name A5\nconstruct Alt(5)").unwrap();
        let opts = SweepOptions {
            prime: Some(5),
            ..Default::default()
        };
        let r = sweep_specs(&[spec], &opts, None).unwrap();
        assert_eq!(r.to_text().lines().next().unwrap(), "A5 p=5 k0s=4 bound=4 EQUALITY [i✓ ii✓ iii✓]");
        let json = r.to_json();
        assert!(json.contains("\"verdict\": \"equality\""));
        assert!(json.contains("\"cond_i\": true"));
    }

    #[test]
    fn resource_items_are_recorded() {
        let spec = parse_spec("name S8\nconstruct Sym(8)").unwrap();
        let r = sweep_specs(&[spec], &SweepOptions::default(), None).unwrap();
        assert!(r.resource_errors > 0);
        assert_eq!(r.exit_code(), 3);
    }
}
