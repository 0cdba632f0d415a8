//! Choosing up to three monochromatic components whose union spans, is
//! γ-robust Tutte, overlaps enough and is connected.

use serde::{Deserialize, Serialize};

use super::extremal::{detect_extremal, ExtremalReport};
use super::verify::{check_selection, PropertyFlags};
use crate::error::{Error, Result};
use crate::graph::{monochromatic_components, spanning_component_pair, Colour, EdgeColouring, MonoComponent, BLUE, RED};
use crate::rational::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SelectionRoute {
    /// One of the two covering components spans.
    OneSpanning,
    /// The covering components have different colours.
    DistinctColours,
    /// The covering components have the same colour.
    SameColour,
    /// No candidate from the case analysis passed; found by trying all
    /// spanning choices of at most three components.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSelection {
    /// C1, C2, C3; empty components allowed.
    pub components: [MonoComponent; 3],
    pub satisfied: PropertyFlags,
    pub route: SelectionRoute,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ComponentsOutcome {
    Extremal(ExtremalReport),
    Selection(ComponentSelection),
}

fn other(c: Colour) -> Colour {
    if c == RED {
        BLUE
    } else {
        RED
    }
}

/// Components of a colour, largest first, ties by smallest vertex.
fn by_size(g: &EdgeColouring, c: Colour) -> Vec<MonoComponent> {
    let mut v = monochromatic_components(g, c);
    v.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.min_vertex()));
    v
}

struct Candidates {
    list: Vec<(SelectionRoute, [MonoComponent; 3])>,
}

impl Candidates {
    fn push(&mut self, route: SelectionRoute, parts: [Option<&MonoComponent>; 3], empty_colour: Colour) {
        let parts = parts.map(|p| p.cloned().unwrap_or_else(|| MonoComponent::empty(empty_colour)));
        if !self.list.iter().any(|(_, q)| *q == parts) {
            self.list.push((route, parts));
        }
    }

    fn one_spanning(&mut self, g: &EdgeColouring, r: &MonoComponent, gamma: &Rational) {
        let route = SelectionRoute::OneSpanning;
        let m = g.n();
        let c = other(r.colour);
        let blues = by_size(g, c);
        let big = (Rational::new(1, 3) + *gamma * 3) * Rational::from_integer(m as i64);
        let large: Vec<&MonoComponent> = blues.iter().filter(|b| Rational::from_integer(b.len() as i64) >= big).collect();
        if large.len() >= 2 {
            self.push(route, [Some(r), Some(large[0]), Some(large[1])], c);
            self.push(route, [Some(r), Some(large[0]), None], c);
            self.push(route, [Some(r), Some(large[1]), None], c);
        }
        let (b1, b2, b3) = (blues.first(), blues.get(1), blues.get(2));
        if b2.is_some() {
            self.push(route, [Some(r), b1, b2], c);
        }
        if b3.is_some() {
            self.push(route, [Some(r), b1, b3], c);
        }
        if b3.is_some() {
            self.push(route, [Some(r), b2, b3], c);
        }
        self.push(route, [Some(r), b1, None], c);
        self.push(route, [Some(r), None, None], c);
    }

    fn distinct(&mut self, g: &EdgeColouring, r: &MonoComponent, b: &MonoComponent) {
        let route = SelectionRoute::DistinctColours;
        let r2 = by_size(g, r.colour).into_iter().find(|x| x != r);
        let b2 = by_size(g, b.colour).into_iter().find(|x| x != b);
        self.push(route, [Some(r), Some(b), r2.as_ref()], r.colour);
        self.push(route, [Some(b), Some(r), b2.as_ref()], b.colour);
        self.push(route, [Some(r), Some(b), None], r.colour);
    }

    fn same(&mut self, g: &EdgeColouring, c1: &MonoComponent, c2: &MonoComponent) {
        let (r1, r2) = if (std::cmp::Reverse(c1.len()), c1.min_vertex()) <= (std::cmp::Reverse(c2.len()), c2.min_vertex()) {
            (c1, c2)
        } else {
            (c2, c1)
        };
        let blues: Vec<MonoComponent> = monochromatic_components(g, other(r1.colour))
            .into_iter()
            .filter(|b| b.vertices.iter().any(|&v| r2.contains(v)))
            .collect();
        if blues.len() == 1 {
            self.distinct(g, r1, &blues[0]);
            return;
        }
        if let Some(b) = blues.iter().find(|b| r1.vertices.iter().all(|&v| b.contains(v))) {
            self.distinct(g, r2, b);
            return;
        }
        if let [b1, b2] = blues.as_slice() {
            let route = SelectionRoute::SameColour;
            let c = r1.colour;
            self.push(route, [Some(r1), Some(r2), Some(b1)], c);
            self.push(route, [Some(r1), Some(r2), Some(b2)], c);
            self.push(route, [Some(r1), Some(b1), Some(b2)], c);
            self.push(route, [Some(r2), Some(b1), Some(b2)], c);
        }
    }
}

fn proof_order(g: &EdgeColouring, gamma: &Rational) -> Vec<(SelectionRoute, [MonoComponent; 3])> {
    let mut cands = Candidates { list: Vec::new() };
    let m = g.n();
    let Some((c1, c2)) = spanning_component_pair(g) else { return cands.list };
    if c1.spans(m) || c2.spans(m) {
        for c in [&c1, &c2] {
            if c.spans(m) {
                cands.one_spanning(g, c, gamma);
            }
        }
    } else if c1.colour != c2.colour {
        cands.distinct(g, &c1, &c2);
    } else {
        cands.same(g, &c1, &c2);
    }
    cands.list
}

/// Every spanning choice of at most three distinct components, spanning
/// components first so that the "C1 spans" alternative can apply.
fn exhaustive(g: &EdgeColouring) -> Vec<[MonoComponent; 3]> {
    let m = g.n();
    let mut all = monochromatic_components(g, RED);
    all.extend(monochromatic_components(g, BLUE));
    all.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.min_vertex(), c.colour));
    let k = all.len();
    let covers = |ids: &[usize]| {
        let mut seen = vec![false; m];
        for &i in ids {
            for &v in &all[i].vertices {
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    };
    let mut out = Vec::new();
    let pad = |ids: &[usize]| -> [MonoComponent; 3] {
        [0, 1, 2].map(|t| ids.get(t).map_or_else(|| MonoComponent::empty(RED), |&i| all[i].clone()))
    };
    for a in 0..k {
        if covers(&[a]) {
            out.push(pad(&[a]));
        }
        for b in a + 1..k {
            if covers(&[a, b]) {
                out.push(pad(&[a, b]));
                out.push(pad(&[b, a]));
            }
            for c in b + 1..k {
                if covers(&[a, b, c]) {
                    out.push(pad(&[a, b, c]));
                }
            }
        }
    }
    out
}

fn select(g: &EdgeColouring, gamma: &Rational) -> Result<Option<ComponentSelection>> {
    for (route, parts) in proof_order(g, gamma) {
        let flags = check_selection(g, &parts, gamma)?;
        if flags.all_hold() {
            return Ok(Some(ComponentSelection { components: parts, satisfied: flags, route }));
        }
    }
    for parts in exhaustive(g) {
        let flags = check_selection(g, &parts, gamma)?;
        if flags.all_hold() {
            return Ok(Some(ComponentSelection { components: parts, satisfied: flags, route: SelectionRoute::Exhaustive }));
        }
    }
    Ok(None)
}

/// The component lemma as a procedure: a 4γ-extremal report, or a
/// selection whose properties were all re-checked.
pub fn find_components(g: &EdgeColouring, gamma: &Rational) -> Result<ComponentsOutcome> {
    let m = g.n();
    let need = Rational::new(2, 3) + *gamma * 8;
    let delta = g.min_degree();
    if m > 0 && Rational::from_integer(delta as i64) < need * Rational::from_integer(m as i64) {
        return Err(Error::MinDegreeTooLow { required: format!("({})m", format_rational(&need)), actual: delta });
    }
    let report = detect_extremal(g, &(*gamma * 4));
    if report.is_extremal() {
        return Ok(ComponentsOutcome::Extremal(report));
    }
    match select(g, gamma)? {
        Some(s) => Ok(ComponentsOutcome::Selection(s)),
        None => Err(Error::InternalContradiction(format!(
            "no component selection and no {}-extremal colouring on {m} vertices",
            format_rational(&(*gamma * 4))
        ))),
    }
}

/// The same search without the degree precondition or the extremal test.
pub fn select_components(g: &EdgeColouring, gamma: &Rational) -> Result<Option<ComponentSelection>> {
    select(g, gamma)
}
