//! Recognising the two extremal colourings.

use serde::{Deserialize, Serialize};

use crate::graph::{monochromatic_components, Colour, EdgeColouring, MonoComponent, BLUE, RED};
use crate::rational::{serde_str, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalKind {
    None,
    BipartiteLike,
    FourCycleLike,
}

/// One colour has a spanning bipartite component with classes x1, x2 of
/// nearly equal size; the other colour has exactly two components, both
/// bipartite, on x1 and on x2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteWitness {
    pub spanning_colour: Colour,
    pub spanning: MonoComponent,
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    /// Components of the other colour on x1 and x2.
    pub on_x1: MonoComponent,
    pub on_x2: MonoComponent,
}

/// Two components per colour; blocks I_ij = V(R_i) ∩ V(B_j). Diagonal
/// blocks are mostly `diagonal_colour`, the others mostly the other colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleWitness {
    pub reds: [MonoComponent; 2],
    pub blues: [MonoComponent; 2],
    pub blocks: [[Vec<usize>; 2]; 2],
    pub diagonal_colour: Colour,
    /// Wrong-colour edges inside each block.
    pub miscoloured: [[u64; 2]; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub kind: ExtremalKind,
    #[serde(with = "serde_str")]
    pub gamma: Rational,
    pub bipartite: Option<BipartiteWitness>,
    pub four_cycle: Option<FourCycleWitness>,
}

impl ExtremalReport {
    #[must_use]
    pub fn is_extremal(&self) -> bool {
        self.kind != ExtremalKind::None
    }

    /// Total wrong-colour edges over the four blocks (four-cycle case).
    #[must_use]
    pub fn miscoloured_edges(&self) -> Option<u64> {
        self.four_cycle.as_ref().map(|w| w.miscoloured.iter().flatten().sum())
    }
}

fn other(c: Colour) -> Colour {
    if c == RED {
        BLUE
    } else {
        RED
    }
}

fn gm(gamma: &Rational, m: usize) -> Rational {
    *gamma * Rational::from_integer(m as i64)
}

fn bipartite_like(g: &EdgeColouring, gamma: &Rational) -> Option<BipartiteWitness> {
    let m = g.n();
    for c in [RED, BLUE] {
        let comps = monochromatic_components(g, c);
        let [span] = comps.as_slice() else { continue };
        let Some((x1, x2)) = &span.bipartition else { continue };
        let diff = (x1.len() as i64 - x2.len() as i64).abs();
        if Rational::from_integer(diff) > gm(gamma, m) {
            continue;
        }
        let others = monochromatic_components(g, other(c));
        let [p, q] = others.as_slice() else { continue };
        if !p.is_bipartite() || !q.is_bipartite() {
            continue;
        }
        let (on_x1, on_x2) = if &p.vertices == x1 && &q.vertices == x2 {
            (p, q)
        } else if &q.vertices == x1 && &p.vertices == x2 {
            (q, p)
        } else {
            continue;
        };
        return Some(BipartiteWitness {
            spanning_colour: c,
            spanning: span.clone(),
            x1: x1.clone(),
            x2: x2.clone(),
            on_x1: on_x1.clone(),
            on_x2: on_x2.clone(),
        });
    }
    None
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

fn count_inside(g: &EdgeColouring, block: &[usize], c: Colour) -> u64 {
    let mut k = 0;
    for &v in block {
        for &u in g.colour_neighbours(v, c) {
            if u > v && block.binary_search(&u).is_ok() {
                k += 1;
            }
        }
    }
    k
}

fn four_cycle_like(g: &EdgeColouring, gamma: &Rational) -> Option<FourCycleWitness> {
    let m = g.n();
    let reds = monochromatic_components(g, RED);
    let blues = monochromatic_components(g, BLUE);
    let ([r1, r2], [b1, b2]) = (reds.as_slice(), blues.as_slice()) else { return None };
    let cap = (Rational::new(1, 4) + *gamma) * Rational::from_integer(m as i64);
    let wrong_cap = *gamma * Rational::from_integer((m * m) as i64);
    let mut best: Option<FourCycleWitness> = None;
    for (bl1, bl2) in [(b1, b2), (b2, b1)] {
        let rs = [r1, r2];
        let bs = [bl1, bl2];
        let blocks: [[Vec<usize>; 2]; 2] =
            [0, 1].map(|i| [0, 1].map(|j| intersect(&rs[i].vertices, &bs[j].vertices)));
        if blocks.iter().flatten().any(|b| Rational::from_integer(b.len() as i64) > cap) {
            return None;
        }
        let miscoloured = [0, 1].map(|i| [0, 1].map(|j| count_inside(g, &blocks[i][j], if i == j { RED } else { BLUE })));
        if miscoloured.iter().flatten().any(|&w| Rational::from_integer(w as i64) > wrong_cap) {
            continue;
        }
        let cand = FourCycleWitness {
            reds: [r1.clone(), r2.clone()],
            blues: [bl1.clone(), bl2.clone()],
            blocks,
            diagonal_colour: BLUE,
            miscoloured,
        };
        let total = |w: &FourCycleWitness| w.miscoloured.iter().flatten().sum::<u64>();
        if best.as_ref().map_or(true, |b| total(&cand) < total(b)) {
            best = Some(cand);
        }
    }
    best
}

/// Checks both configurations, in both colour roles.
#[must_use]
pub fn detect_extremal(g: &EdgeColouring, gamma: &Rational) -> ExtremalReport {
    let mut report = ExtremalReport { kind: ExtremalKind::None, gamma: *gamma, bipartite: None, four_cycle: None };
    if let Some(w) = bipartite_like(g, gamma) {
        report.kind = ExtremalKind::BipartiteLike;
        report.bipartite = Some(w);
    } else if let Some(w) = four_cycle_like(g, gamma) {
        report.kind = ExtremalKind::FourCycleLike;
        report.four_cycle = Some(w);
    }
    debug_assert_eq!(check_extremal_report(g, &report), Ok(()));
    report
}

/// Re-checks every clause of a positive report from scratch.
pub fn check_extremal_report(g: &EdgeColouring, report: &ExtremalReport) -> Result<(), String> {
    let m = g.n();
    let gamma = report.gamma;
    match report.kind {
        ExtremalKind::None => Ok(()),
        ExtremalKind::BipartiteLike => {
            let w = report.bipartite.as_ref().ok_or("missing witness")?;
            let c = w.spanning_colour;
            let sub = g.colour_graph(c);
            if !sub.is_connected() {
                return Err("spanning component is not connected".into());
            }
            let mut all: Vec<usize> = w.x1.iter().chain(&w.x2).copied().collect();
            all.sort_unstable();
            if all != (0..m).collect::<Vec<_>>() {
                return Err("classes do not partition the vertex set".into());
            }
            for (a, b) in sub.edges() {
                if w.x1.binary_search(&a).is_ok() == w.x1.binary_search(&b).is_ok() {
                    return Err(format!("edge {a}-{b} inside a class"));
                }
            }
            let diff = (w.x1.len() as i64 - w.x2.len() as i64).abs();
            if Rational::from_integer(diff) > gm(&gamma, m) {
                return Err("classes too unbalanced".into());
            }
            let o = g.colour_graph(other(c));
            let comps = o.components();
            if comps.len() != 2 {
                return Err(format!("other colour has {} components", comps.len()));
            }
            for comp in &comps {
                if *comp != w.x1 && *comp != w.x2 {
                    return Err("other-colour component differs from both classes".into());
                }
                if o.induced(comp).two_colouring().is_none() {
                    return Err("other-colour component has an odd cycle".into());
                }
            }
            Ok(())
        }
        ExtremalKind::FourCycleLike => {
            let w = report.four_cycle.as_ref().ok_or("missing witness")?;
            for c in [RED, BLUE] {
                if g.colour_graph(c).components().len() != 2 {
                    return Err(format!("colour {c} does not have exactly two components"));
                }
            }
            let mut all: Vec<usize> = w.blocks.iter().flatten().flatten().copied().collect();
            all.sort_unstable();
            if all != (0..m).collect::<Vec<_>>() {
                return Err("blocks do not partition the vertex set".into());
            }
            let cap = (Rational::new(1, 4) + gamma) * Rational::from_integer(m as i64);
            let wrong_cap = gamma * Rational::from_integer((m * m) as i64);
            for i in 0..2 {
                for j in 0..2 {
                    let block = &w.blocks[i][j];
                    if *block != intersect(&w.reds[i].vertices, &w.blues[j].vertices) {
                        return Err(format!("block ({i},{j}) is not the stated intersection"));
                    }
                    if Rational::from_integer(block.len() as i64) > cap {
                        return Err(format!("block ({i},{j}) too large"));
                    }
                    let want = if i == j { w.diagonal_colour } else { other(w.diagonal_colour) };
                    let wrong = count_inside(g, block, other(want));
                    if Rational::from_integer(wrong as i64) > wrong_cap {
                        return Err(format!("block ({i},{j}) has {wrong} wrong-colour edges"));
                    }
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColouredMultiGraph;
    use crate::rational::rat;

    #[test]
    fn all_red_is_not_extremal() {
        let mut e = Vec::new();
        for u in 0..8 {
            for v in u + 1..8 {
                e.push((u, v, RED));
            }
        }
        let g = ColouredMultiGraph::two_coloured(8, &e).unwrap();
        assert_eq!(detect_extremal(&g, &rat(1, 10)).kind, ExtremalKind::None);
    }

    #[test]
    fn bipartite_like_by_hand() {
        // Red K_{3,3} between {0,1,2} and {3,4,5}; blue paths inside classes.
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b, RED));
            }
        }
        e.extend([(0, 1, BLUE), (1, 2, BLUE), (3, 4, BLUE), (4, 5, BLUE)]);
        let g = ColouredMultiGraph::two_coloured(6, &e).unwrap();
        let r = detect_extremal(&g, &rat(0, 1));
        assert_eq!(r.kind, ExtremalKind::BipartiteLike);
        assert_eq!(check_extremal_report(&g, &r), Ok(()));
        // A blue triangle breaks it.
        e.push((0, 2, BLUE));
        let g = ColouredMultiGraph::two_coloured(6, &e).unwrap();
        assert_eq!(detect_extremal(&g, &rat(1, 2)).kind, ExtremalKind::None);
    }

    #[test]
    fn swapped_colours_are_recognised() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b, BLUE));
            }
        }
        e.extend([(0, 1, RED), (1, 2, RED), (3, 4, RED), (4, 5, RED)]);
        let g = ColouredMultiGraph::two_coloured(6, &e).unwrap();
        let r = detect_extremal(&g, &rat(0, 1));
        assert_eq!(r.kind, ExtremalKind::BipartiteLike);
        assert_eq!(r.bipartite.unwrap().spanning_colour, BLUE);
    }

    #[test]
    fn four_cycle_by_hand() {
        // Blocks of two: I11={0,1}, I12={2,3}, I21={4,5}, I22={6,7}.
        // R1 = I11 ∪ I12, R2 = I21 ∪ I22, B1 = I11 ∪ I21, B2 = I12 ∪ I22.
        let blocks = [[0, 1], [2, 3], [4, 5], [6, 7]];
        let mut e = Vec::new();
        let pair = |x: [usize; 2], y: [usize; 2], c, e: &mut Vec<_>| {
            for a in x {
                for b in y {
                    e.push((a.min(b), a.max(b), c));
                }
            }
        };
        pair(blocks[0], blocks[1], RED, &mut e);
        pair(blocks[2], blocks[3], RED, &mut e);
        pair(blocks[0], blocks[2], BLUE, &mut e);
        pair(blocks[1], blocks[3], BLUE, &mut e);
        e.extend([(0, 1, BLUE), (6, 7, BLUE), (2, 3, RED), (4, 5, RED)]);
        let g = ColouredMultiGraph::two_coloured(8, &e).unwrap();
        let r = detect_extremal(&g, &rat(0, 1));
        assert_eq!(r.kind, ExtremalKind::FourCycleLike);
        assert_eq!(r.miscoloured_edges(), Some(0));
        assert_eq!(check_extremal_report(&g, &r), Ok(()));
    }
}
