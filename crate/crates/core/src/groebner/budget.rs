use alloc::sync::Arc;
use core::fmt;

use crate::{Error, Result};

/// External cancellation source, e.g. a wall-clock deadline supplied by a
/// caller that has a clock.
pub trait Interrupt: Send + Sync {
    fn expired(&self) -> bool;
}

/// Per-call resource limits for Gröbner computations.
///
/// `max_pairs` bounds the S-pairs a single Buchberger run may process; a
/// limit of zero refuses any work. Exceeding a limit surfaces as
/// [`Error::Timeout`], never as a partial answer.
#[derive(Clone, Default)]
pub struct Budget {
    max_pairs: Option<u64>,
    interrupt: Option<Arc<dyn Interrupt>>,
    check_posts: bool,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_max_pairs(mut self, max_pairs: u64) -> Self {
        self.max_pairs = Some(max_pairs);
        self
    }

    pub fn with_interrupt(mut self, interrupt: Arc<dyn Interrupt>) -> Self {
        self.interrupt = Some(interrupt);
        self
    }

    /// Re-checks every ideal operation's containment postconditions by
    /// membership tests. Expensive; meant for tests.
    pub fn with_post_checks(mut self, on: bool) -> Self {
        self.check_posts = on;
        self
    }

    pub fn max_pairs(&self) -> Option<u64> {
        self.max_pairs
    }

    pub fn check_posts(&self) -> bool {
        self.check_posts
    }

    pub fn interrupted(&self) -> bool {
        self.interrupt.as_ref().is_some_and(|i| i.expired())
    }

    pub(crate) fn charge(&self, pairs_done: u64) -> Result<()> {
        if self.max_pairs.is_some_and(|m| pairs_done >= m) || self.interrupted() {
            return Err(Error::Timeout);
        }
        Ok(())
    }

    pub(crate) fn poll(&self) -> Result<()> {
        if self.interrupted() {
            return Err(Error::Timeout);
        }
        Ok(())
    }
}

impl fmt::Debug for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Budget")
            .field("max_pairs", &self.max_pairs)
            .field("interrupt", &self.interrupt.is_some())
            .field("check_posts", &self.check_posts)
            .finish()
    }
}
