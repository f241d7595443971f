//! Concurrent execution of verification checks with wall-clock deadlines.

use std::sync::Arc;
use std::time::{Duration, Instant};

use unproj_core::arith::Field;
use unproj_core::groebner::{Budget, Interrupt};
use unproj_core::unprojection::{verify_claim, CheckId, UnprojectionFamily};

use crate::report::{CheckRecord, ReportDocument};

/// Expires once a fixed instant has passed.
#[derive(Debug)]
pub struct Deadline(Instant);

impl Deadline {
    pub fn after(d: Duration) -> Self {
        Deadline(Instant::now() + d)
    }
}

impl Interrupt for Deadline {
    fn expired(&self) -> bool {
        Instant::now() >= self.0
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Wall-clock limit applied to each check separately.
    pub timeout: Option<Duration>,
    pub max_pairs: Option<u64>,
    /// Record elapsed time; when false every `elapsed_ms` is 0 so reports
    /// are byte-for-byte reproducible.
    pub timings: bool,
    pub post_checks: bool,
}

impl RunOptions {
    fn budget(&self) -> Budget {
        let mut b = Budget::unlimited().with_post_checks(self.post_checks);
        if let Some(m) = self.max_pairs {
            b = b.with_max_pairs(m);
        }
        if let Some(t) = self.timeout {
            b = b.with_interrupt(Arc::new(Deadline::after(t)));
        }
        b
    }
}

/// Runs `ids` on separate threads and collects records in `ids` order.
pub fn verify_all<K: Field>(family: &UnprojectionFamily<K>, ids: &[CheckId], opts: &RunOptions) -> ReportDocument {
    let field = family.ambient().field().name();
    let mut report = ReportDocument::new(family.n(), field);
    let records: Vec<CheckRecord> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| {
                s.spawn(move || {
                    let start = Instant::now();
                    let out = verify_claim(family, id, &opts.budget());
                    let elapsed = if opts.timings { start.elapsed().as_millis() as u64 } else { 0 };
                    CheckRecord {
                        id: out.id.as_str().into(),
                        status: out.status.as_str().into(),
                        detail: out.detail,
                        elapsed_ms: elapsed,
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    report.checks = records;
    report
}
