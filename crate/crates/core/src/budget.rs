//! Node budgets for the exponential searches.

/// Maximum number of search nodes (expanded states) a search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Budget(100_000_000)
    }
}

/// Outcome of a budgeted search. Running out of budget is its own value and
/// is never reported as a negative answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decided<T> {
    Value(T),
    Indeterminate { explored: u64 },
}

impl<T> Decided<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Decided::Value(v) => Some(v),
            Decided::Indeterminate { .. } => None,
        }
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Decided::Indeterminate { .. })
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Decided<U> {
        match self {
            Decided::Value(v) => Decided::Value(f(v)),
            Decided::Indeterminate { explored } => Decided::Indeterminate { explored },
        }
    }

    #[track_caller]
    pub fn expect(self, msg: &str) -> T {
        match self {
            Decided::Value(v) => v,
            Decided::Indeterminate { explored } => {
                panic!("{msg}: search budget exhausted after {explored} nodes")
            }
        }
    }
}

/// Counts nodes against a [`Budget`].
#[derive(Debug, Clone)]
pub(crate) struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            limit: budget.0,
            used: 0,
        }
    }

    /// Charges one node; false once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        true
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
