//! Exhaustive searches over connected greedy orderings and proper colourings.

use std::collections::HashSet;

use thiserror::Error;

use crate::budget::{Budget, Decided, Meter};
use crate::chromatic::exact_chromatic_index;
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph};
use crate::greedy::{ConnectedOrdering, GreedyRun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("a precolour needs a start edge")]
    PrecolourWithoutStart,
    #[error("precolour {colour} is outside [{k}]")]
    PrecolourOutOfRange { colour: Colour, k: Colour },
    #[error("start edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("number of colours must lie in 1..=63, got {0}")]
    BadColourCount(Colour),
    #[error("graph is not connected")]
    Disconnected,
}

/// A connected ordering together with the colouring it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ordering: ConnectedOrdering,
    pub colouring: EdgeColouring,
}

/// Search for a connected ordering whose greedy colouring stays within `k`
/// colours, optionally starting from a given (and possibly precoloured) edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CgcQuery {
    pub k: Colour,
    pub start: Option<EdgeId>,
    pub precolour: Option<Colour>,
    pub budget: Budget,
    /// Remember partial colourings already shown to be dead ends.
    pub memo: bool,
}

impl CgcQuery {
    pub fn new(k: Colour) -> Self {
        CgcQuery {
            k,
            start: None,
            precolour: None,
            budget: Budget::default(),
            memo: true,
        }
    }

    pub fn start(mut self, e: EdgeId) -> Self {
        self.start = Some(e);
        self
    }

    pub fn precolour(mut self, c: Colour) -> Self {
        self.precolour = Some(c);
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn memo(mut self, on: bool) -> Self {
        self.memo = on;
        self
    }

    pub fn run(&self, g: &Graph) -> Result<Decided<Option<Witness>>, OracleError> {
        let k = self.k;
        if k == 0 || k >= 64 {
            return Err(OracleError::BadColourCount(k));
        }
        if self.precolour.is_some() && self.start.is_none() {
            return Err(OracleError::PrecolourWithoutStart);
        }
        if let Some(c) = self.precolour {
            if c == 0 || c > k {
                return Err(OracleError::PrecolourOutOfRange { colour: c, k });
            }
        }
        if let Some(e) = self.start {
            if e >= g.edge_count() {
                return Err(OracleError::UnknownEdge(e));
            }
        }
        if !g.is_connected() {
            return Err(OracleError::Disconnected);
        }
        if g.edge_count() == 0 {
            let witness = Witness {
                ordering: ConnectedOrdering::default(),
                colouring: EdgeColouring::uncoloured(0),
            };
            return Ok(Decided::Value(Some(witness)));
        }

        let mut search = Search::new(g, k, self.budget, self.memo);
        let firsts: Vec<EdgeId> = match self.start {
            Some(e) => vec![e],
            None => (0..g.edge_count()).collect(),
        };
        let mut found = false;
        for e in firsts {
            let c = self.precolour.unwrap_or(1);
            search.place(e, c);
            match search.extend() {
                None => {
                    return Ok(Decided::Indeterminate {
                        explored: search.meter.used(),
                    })
                }
                Some(true) => {
                    found = true;
                    break;
                }
                Some(false) => search.unplace(e, c),
            }
        }
        if !found {
            return Ok(Decided::Value(None));
        }
        Ok(Decided::Value(Some(self.verify(g, &search.order))))
    }

    /// Replays a found ordering as an independent check of the search.
    fn verify(&self, g: &Graph, order: &[EdgeId]) -> Witness {
        let mut run = GreedyRun::new(g);
        for (i, &e) in order.iter().enumerate() {
            match (i, self.precolour) {
                (0, Some(c)) => run.push_precoloured(e, c),
                _ => run.push(e),
            }
            .expect("search emits connected orderings");
        }
        let result = run.finish().expect("search covers every edge");
        assert!(result.colours_used <= self.k, "witness exceeds {} colours", self.k);
        Witness {
            ordering: ConnectedOrdering::new(g, order.to_vec()).expect("checked by the replay"),
            colouring: result.colouring,
        }
    }
}

/// Whether some connected ordering greedily colours `g` with at most `k`
/// colours; `start` fixes the first edge and `precolour` its colour.
pub fn exists_cgc(
    g: &Graph,
    k: Colour,
    start: Option<EdgeId>,
    precolour: Option<Colour>,
    budget: Budget,
) -> Result<Decided<Option<Witness>>, OracleError> {
    CgcQuery {
        k,
        start,
        precolour,
        budget,
        memo: true,
    }
    .run(g)
}

/// `χ'_c(g)` with a witness, searching upwards from `χ'(g)`. The budget
/// applies to each number of colours tried.
pub fn connected_chromatic_index(g: &Graph, budget: Budget) -> Result<Decided<(Colour, Witness)>, OracleError> {
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let lower = match exact_chromatic_index(g, budget) {
        Decided::Value(k) => k.max(1),
        Decided::Indeterminate { explored } => return Ok(Decided::Indeterminate { explored }),
    };
    // a greedy value never exceeds 2Δ − 1
    let upper = (2 * g.max_degree()).max(2) - 1;
    for k in lower..=upper {
        match CgcQuery::new(k).budget(budget).run(g)? {
            Decided::Value(Some(w)) => return Ok(Decided::Value((k, w))),
            Decided::Value(None) => {}
            Decided::Indeterminate { explored } => return Ok(Decided::Indeterminate { explored }),
        }
    }
    unreachable!("every connected ordering uses at most 2Δ − 1 colours")
}

struct Search<'g> {
    g: &'g Graph,
    k: Colour,
    colour: Vec<u8>,
    mask: Vec<u64>,
    order: Vec<EdgeId>,
    dead: Option<HashSet<Box<[u64]>>>,
    bits: u32,
    meter: Meter,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: Colour, budget: Budget, memo: bool) -> Self {
        Search {
            g,
            k,
            colour: vec![0; g.edge_count()],
            mask: vec![0; g.vertex_count()],
            order: Vec::with_capacity(g.edge_count()),
            dead: memo.then(HashSet::new),
            bits: usize::BITS - k.leading_zeros(),
            meter: Meter::new(budget),
        }
    }

    fn place(&mut self, e: EdgeId, c: Colour) {
        let (a, b) = self.g.endpoints(e);
        self.colour[e] = c as u8;
        self.mask[a] |= 1 << c;
        self.mask[b] |= 1 << c;
        self.order.push(e);
    }

    fn unplace(&mut self, e: EdgeId, c: Colour) {
        let (a, b) = self.g.endpoints(e);
        self.colour[e] = 0;
        self.mask[a] &= !(1 << c);
        self.mask[b] &= !(1 << c);
        self.order.pop();
    }

    fn key(&self) -> Box<[u64]> {
        let per_word = (64 / self.bits) as usize;
        let mut words = vec![0u64; self.colour.len().div_ceil(per_word)];
        for (i, &c) in self.colour.iter().enumerate() {
            words[i / per_word] |= (c as u64) << ((i % per_word) as u32 * self.bits);
        }
        words.into_boxed_slice()
    }

    fn seen(&self, e: EdgeId) -> u64 {
        let (a, b) = self.g.endpoints(e);
        self.mask[a] | self.mask[b]
    }

    /// Some uncoloured edge next to `e` already sees every colour of `[k]`.
    fn blocks_a_neighbour(&self, e: EdgeId) -> bool {
        let full = (1u64 << (self.k + 1)) - 2;
        let (a, b) = self.g.endpoints(e);
        self.g.incident(a).iter().chain(self.g.incident(b)).any(|&(_, f)| self.colour[f] == 0 && self.seen(f) & full == full)
    }

    /// `Some(found)`, or `None` once the budget is spent.
    fn extend(&mut self) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        if self.order.len() == self.colour.len() {
            return Some(true);
        }
        let key = self.dead.as_ref().map(|_| self.key());
        if let (Some(dead), Some(key)) = (&self.dead, &key) {
            if dead.contains(key) {
                return Some(false);
            }
        }
        for e in 0..self.colour.len() {
            let seen = self.seen(e);
            if self.colour[e] != 0 || seen == 0 {
                continue;
            }
            let c = (!seen & !1).trailing_zeros() as Colour;
            if c > self.k {
                // this edge can never be added, whatever comes first
                return self.mark_dead(key);
            }
            self.place(e, c);
            if !self.blocks_a_neighbour(e) {
                match self.extend() {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.unplace(e, c);
        }
        self.mark_dead(key)
    }

    fn mark_dead(&mut self, key: Option<Box<[u64]>>) -> Option<bool> {
        if let (Some(dead), Some(key)) = (&mut self.dead, key) {
            dead.insert(key);
        }
        Some(false)
    }
}

/// Visits every proper edge colouring of `g` with colours in `[k]` and
/// returns how many there are.
pub fn enumerate_proper_colourings(
    g: &Graph,
    k: Colour,
    budget: Budget,
    mut visit: impl FnMut(&EdgeColouring),
) -> Decided<u64> {
    assert!(k < 64, "palette limited to 63 colours");
    let mut walk = Enumeration {
        g,
        k,
        colours: vec![0; g.edge_count()],
        mask: vec![0; g.vertex_count()],
        meter: Meter::new(budget),
        count: 0,
    };
    if walk.visit_from(0, &mut visit) {
        Decided::Value(walk.count)
    } else {
        Decided::Indeterminate {
            explored: walk.meter.used(),
        }
    }
}

struct Enumeration<'g> {
    g: &'g Graph,
    k: Colour,
    colours: Vec<Colour>,
    mask: Vec<u64>,
    meter: Meter,
    count: u64,
}

impl Enumeration<'_> {
    /// Colours edges `e..` in every proper way; false once the budget is spent.
    fn visit_from(&mut self, e: EdgeId, visit: &mut impl FnMut(&EdgeColouring)) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if e == self.g.edge_count() {
            self.count += 1;
            visit(&EdgeColouring::from_total(self.colours.clone()).expect("positive colours"));
            return true;
        }
        let (a, b) = self.g.endpoints(e);
        for c in 1..=self.k {
            if (self.mask[a] | self.mask[b]) & (1 << c) != 0 {
                continue;
            }
            self.colours[e] = c;
            self.mask[a] |= 1 << c;
            self.mask[b] |= 1 << c;
            let ok = self.visit_from(e + 1, visit);
            self.mask[a] &= !(1 << c);
            self.mask[b] &= !(1 << c);
            if !ok {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};
    use crate::greedy::greedy_colour;

    #[test]
    fn cycles() {
        let c5 = cycle(5);
        let w = exists_cgc(&c5, 3, None, None, Budget::default()).unwrap().expect("decided").expect("exists");
        assert!(w.colouring.max_colour() <= 3);
        assert_eq!(exists_cgc(&c5, 2, None, None, Budget::default()).unwrap(), Decided::Value(None));
        assert_eq!(connected_chromatic_index(&cycle(6), Budget::default()).unwrap().expect("decided").0, 2);
        assert_eq!(connected_chromatic_index(&c5, Budget::default()).unwrap().expect("decided").0, 3);
    }

    #[test]
    fn start_and_precolour() {
        // P3 with the first edge forced to 2: the second edge then takes 1
        let p3 = path(3);
        let w = exists_cgc(&p3, 2, Some(0), Some(2), Budget::default()).unwrap().expect("decided").unwrap();
        assert_eq!(w.colouring.as_slice(), &[Some(2), Some(1)]);
        assert_eq!(w.ordering.edges(), &[0, 1]);
        assert_eq!(
            exists_cgc(&p3, 2, Some(0), Some(3), Budget::default()),
            Err(OracleError::PrecolourOutOfRange { colour: 3, k: 2 })
        );
        // K_{1,3} started with its first edge forced to 3 still needs only 3 colours
        let w = exists_cgc(&star(3), 3, Some(0), Some(3), Budget::default()).unwrap().expect("decided").unwrap();
        assert_eq!(w.colouring.colour(0), 3);
    }

    #[test]
    fn input_errors() {
        let p3 = path(3);
        assert_eq!(exists_cgc(&p3, 2, None, Some(1), Budget::default()), Err(OracleError::PrecolourWithoutStart));
        assert_eq!(exists_cgc(&p3, 2, Some(9), None, Budget::default()), Err(OracleError::UnknownEdge(9)));
        let two = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(exists_cgc(&two, 2, None, None, Budget::default()), Err(OracleError::Disconnected));
        assert_eq!(exists_cgc(&p3, 0, None, None, Budget::default()), Err(OracleError::BadColourCount(0)));
    }

    #[test]
    fn budget_is_reported() {
        let k4 = complete(4);
        let r = exists_cgc(&k4, 3, None, None, Budget(2)).unwrap();
        assert!(r.is_indeterminate());
    }

    #[test]
    fn witnesses_replay() {
        let k4 = complete(4);
        let w = exists_cgc(&k4, 3, None, None, Budget::default()).unwrap().expect("decided").unwrap();
        let r = greedy_colour(&k4, w.ordering.edges()).unwrap();
        assert_eq!(r.colouring, w.colouring);
        assert_eq!(r.colours_used, 3);
    }

    #[test]
    fn enumeration_counts() {
        let single = path(2);
        assert_eq!(enumerate_proper_colourings(&single, 3, Budget::default(), |_| {}), Decided::Value(3));
        assert_eq!(enumerate_proper_colourings(&path(3), 2, Budget::default(), |_| {}), Decided::Value(2));
        // proper 3-edge colourings of K4 are the 3! labelings of its three perfect matchings
        assert_eq!(enumerate_proper_colourings(&complete(4), 3, Budget::default(), |_| {}), Decided::Value(6));
        assert_eq!(enumerate_proper_colourings(&cycle(5), 2, Budget::default(), |_| {}), Decided::Value(0));
        assert!(enumerate_proper_colourings(&complete(4), 3, Budget(3), |_| {}).is_indeterminate());
    }

    #[test]
    fn memo_agrees_with_plain_search() {
        for g in [cycle(5), cycle(6), complete(4), star(3), path(5)] {
            for k in 1..=4 {
                let a = CgcQuery::new(k).memo(true).run(&g).unwrap().map(|w| w.is_some());
                let b = CgcQuery::new(k).memo(false).run(&g).unwrap().map(|w| w.is_some());
                assert_eq!(a, b);
            }
        }
    }
}
