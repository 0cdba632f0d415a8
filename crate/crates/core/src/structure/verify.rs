//! Independent checks of a component selection.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{component_union, monochromatic_components, EdgeColouring, MonoComponent};
use crate::rational::Rational;
use crate::two_matching::robust_tutte;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFlags {
    /// Each non-empty part is a monochromatic component of the graph and
    /// no two coincide.
    pub genuine: bool,
    pub spans: bool,
    /// The union C is γ-robust Tutte.
    pub robust_tutte: bool,
    /// At least (1/3 + γ)m vertices lie in two or more parts.
    pub overlap: bool,
    /// C1 spans, C1 or C2 has an odd cycle, and C3 is empty.
    pub spanning_and_empty: bool,
    /// If all three parts are bipartite then C3 is empty.
    pub odd_cycle_rule: bool,
    pub connected: bool,
}

impl PropertyFlags {
    #[must_use]
    pub fn all_hold(&self) -> bool {
        self.genuine
            && self.spans
            && self.robust_tutte
            && (self.overlap || self.spanning_and_empty)
            && self.odd_cycle_rule
            && self.connected
    }
}

pub fn check_selection(g: &EdgeColouring, parts: &[MonoComponent; 3], gamma: &Rational) -> Result<PropertyFlags> {
    let m = g.n();
    let mut flags = PropertyFlags::default();
    let nonempty: Vec<&MonoComponent> = parts.iter().filter(|c| !c.is_empty()).collect();
    flags.genuine = nonempty.iter().all(|c| monochromatic_components(g, c.colour).iter().any(|d| d == *c))
        && (0..nonempty.len()).all(|i| (i + 1..nonempty.len()).all(|j| nonempty[i] != nonempty[j]));
    let mut count = vec![0u8; m];
    for c in &nonempty {
        for &v in &c.vertices {
            count[v] += 1;
        }
    }
    flags.spans = count.iter().all(|&k| k > 0);
    let shared = count.iter().filter(|&&k| k >= 2).count();
    flags.overlap =
        Rational::from_integer(shared as i64) >= (Rational::new(1, 3) + *gamma) * Rational::from_integer(m as i64);
    flags.spanning_and_empty =
        parts[0].spans(m) && (parts[0].has_odd_cycle || parts[1].has_odd_cycle) && parts[2].is_empty();
    flags.odd_cycle_rule = parts.iter().any(|c| c.has_odd_cycle) || parts[2].is_empty();
    let union = component_union(g, &nonempty);
    flags.connected = union.is_connected();
    flags.robust_tutte = flags.spans && robust_tutte(&union, gamma)?.holds();
    Ok(flags)
}
