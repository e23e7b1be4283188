//! Systems of disjoint representatives for overspan families.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Element;
use crate::overspan::OverspanFamily;

/// One edge or loop per family item, pairwise vertex-disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sdr {
    /// `choice[i]` represents item `i`.
    pub choice: Vec<Element>,
}

impl Sdr {
    pub fn verify(&self, fam: &OverspanFamily, forbidden: &[usize]) -> Result<()> {
        if self.choice.len() != fam.len() {
            return Err(Error::invariant("representative system is not total"));
        }
        for (i, el) in self.choice.iter().enumerate() {
            if !fam.items[i].graph.contains(*el) {
                return Err(Error::invariant(format!("{el:?} is not an element of item {i}")));
            }
            if forbidden.iter().any(|&f| el.touches(f)) {
                return Err(Error::invariant(format!("{el:?} touches a forbidden vertex")));
            }
            if self.choice[i + 1..].iter().any(|o| o.meets(el)) {
                return Err(Error::invariant(format!("{el:?} shares a vertex with another representative")));
            }
        }
        Ok(())
    }
}

struct Search<'a> {
    options: Vec<Vec<Element>>,
    /// For copy 1 of a black edge, the item index of copy 0, and vice versa.
    twin: Vec<Option<usize>>,
    is_second: Vec<bool>,
    used: Vec<bool>,
    chosen: Vec<Option<Element>>,
    fam: &'a OverspanFamily,
}

impl Search<'_> {
    fn allowed(&self, item: usize, el: &Element) -> bool {
        if el.vertices().any(|v| self.used[v]) {
            return false;
        }
        // copy 0 takes the smaller of the two representatives of a black edge
        match self.twin[item].and_then(|t| self.chosen[t]) {
            Some(other) if self.is_second[item] => *el > other,
            Some(other) => *el < other,
            None => true,
        }
    }

    fn solve(&mut self) -> bool {
        let mut pick: Option<(usize, usize)> = None;
        for i in 0..self.options.len() {
            if self.chosen[i].is_some() {
                continue;
            }
            let count = self.options[i].iter().filter(|e| self.allowed(i, e)).count();
            if count == 0 {
                return false;
            }
            if pick.is_none_or(|(_, c)| count < c) {
                pick = Some((i, count));
            }
        }
        let Some((item, _)) = pick else {
            return true;
        };
        let candidates: Vec<Element> = self.options[item].iter().copied().filter(|e| self.allowed(item, e)).collect();
        for el in candidates {
            for v in el.vertices() {
                self.used[v] = true;
            }
            self.chosen[item] = Some(el);
            if self.solve() {
                return true;
            }
            self.chosen[item] = None;
            for v in el.vertices() {
                self.used[v] = false;
            }
        }
        false
    }
}

/// Backtracking search for a system of disjoint representatives avoiding
/// `forbidden`.
///
/// The next item is the one with the fewest usable elements (ties by index);
/// its elements are tried in canonical order. Returns `None` only after the
/// search is exhausted.
pub fn find_sdr(fam: &OverspanFamily, forbidden: &[usize]) -> Option<Sdr> {
    let n = fam.items.first().map_or(0, |it| it.graph.n());
    let options: Vec<Vec<Element>> = fam
        .items
        .iter()
        .map(|it| {
            it.graph
                .elements()
                .into_iter()
                .filter(|e| !forbidden.iter().any(|&f| e.touches(f)))
                .collect()
        })
        .collect();
    let twin = fam
        .items
        .iter()
        .map(|it| fam.item_index(it.edge, 1 - it.copy))
        .collect();
    let mut search = Search {
        options,
        twin,
        is_second: fam.items.iter().map(|it| it.copy == 1).collect(),
        used: vec![false; n],
        chosen: vec![None; fam.len()],
        fam,
    };
    if !search.solve() {
        return None;
    }
    let sdr = Sdr { choice: search.chosen.iter().map(|c| c.expect("total assignment")).collect() };
    debug_assert!(sdr.verify(search.fam, forbidden).is_ok());
    Some(sdr)
}
