//! Hamilton u,u'-paths in graphs split into a dense bipartite part and a
//! set A that is internally dense outside an exceptional subset A'.

use crate::error::{Error, Result};
use crate::graph::{membership, SimpleGraph};
use crate::rational::{ceil_times, Rational};

use super::{hamilton_path_between, is_hamilton_path};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaMode {
    /// Every hypothesis is checked and a failed construction is an
    /// internal contradiction.
    Strict,
    /// Only the structural requirements are checked; the construction is
    /// attempted regardless and may fail.
    Relaxed,
}

#[derive(Clone, Debug)]
pub struct TwoSetInstance<'a> {
    pub h: &'a SimpleGraph,
    pub a: &'a [usize],
    pub b: &'a [usize],
    pub a_prime: &'a [usize],
    pub u: usize,
    pub u2: usize,
    pub mu: Rational,
}

fn count_in(g: &SimpleGraph, v: usize, set: &[bool]) -> usize {
    g.neighbours(v).iter().filter(|&&x| set[x]).count()
}

impl TwoSetInstance<'_> {
    fn structural(&self) -> Result<(Vec<bool>, Vec<bool>, Vec<bool>)> {
        let n = self.h.n();
        let bad = |m: String| Err(Error::PreconditionViolated(m));
        if self.a.iter().chain(self.b).chain(self.a_prime).any(|&v| v >= n) {
            return bad("vertex out of range".into());
        }
        let in_a = membership(n, self.a);
        let in_b = membership(n, self.b);
        let in_ap = membership(n, self.a_prime);
        if self.a.len() + self.b.len() != n || (0..n).any(|v| in_a[v] == in_b[v]) {
            return bad("A and B must partition the vertex set".into());
        }
        if self.a_prime.iter().any(|&v| !in_a[v]) {
            return bad("A' must be a subset of A".into());
        }
        if self.u >= n || self.u2 >= n || self.u == self.u2 {
            return bad("u and u' must be distinct vertices".into());
        }
        if in_ap[self.u] || in_ap[self.u2] {
            return bad("u and u' must lie outside A'".into());
        }
        Ok((in_a, in_b, in_ap))
    }

    /// The first violated hypothesis, if any.
    pub fn violated_hypothesis(&self) -> Result<Option<String>> {
        let (in_a, in_b, in_ap) = self.structural()?;
        let h = self.h;
        let n = h.n();
        let mu = self.mu;
        let (na, nb, nap) = (self.a.len() as i64, self.b.len() as i64, self.a_prime.len() as i64);
        let mu_n = mu * Rational::from_integer(n as i64);
        if mu <= Rational::from_integer(0) || mu > Rational::from_integer(1) {
            return Ok(Some("mu must lie in (0, 1]".into()));
        }
        if Rational::from_integer(n as i64) < Rational::from_integer(100) / mu {
            return Ok(Some(format!("n = {n} is below 100/mu")));
        }
        if nb > na || Rational::from_integer(na) > Rational::from_integer(nb) + mu_n {
            return Ok(Some("need |B| <= |A| <= |B| + mu n".into()));
        }
        if Rational::from_integer(nap) > mu_n {
            return Ok(Some("need |A'| <= mu n".into()));
        }
        let cross = ceil_times(&(Rational::new(1, 4) + mu * 3), n);
        let inner = ceil_times(&(mu * 3), n);
        for &v in self.a {
            if (count_in(h, v, &in_b) as i64) < cross {
                return Ok(Some(format!("(i) deg(v, B) < (1/4 + 3 mu) n for v = {v}")));
            }
        }
        for &v in self.b {
            if (count_in(h, v, &in_a) as i64) < cross {
                return Ok(Some(format!("(ii) deg(v, A) < (1/4 + 3 mu) n for v = {v}")));
            }
        }
        for &v in self.a {
            if !in_ap[v] && (count_in(h, v, &in_a) as i64) < inner {
                return Ok(Some(format!("(iii) deg(v, A) < 3 mu n for v = {v} in A \\ A'")));
            }
        }
        if in_a[self.u] && in_a[self.u2] && na < nb + 1 {
            return Ok(Some("u, u' both in A \\ A' requires |A| >= |B| + 1".into()));
        }
        Ok(None)
    }
}

/// Hamilton path from `inst.u` to `inst.u2`, built by the stub-extension
/// argument: short stubs at both ends, a greedy walk inside A∖A' that
/// balances the two sides, and a bipartite Hamilton path on the rest.
pub fn two_set_hamilton_path(inst: &TwoSetInstance<'_>, mode: LemmaMode) -> Result<Vec<usize>> {
    let (in_a, in_b, in_ap) = inst.structural()?;
    if mode == LemmaMode::Strict {
        if let Some(clause) = inst.violated_hypothesis()? {
            return Err(Error::PreconditionViolated(clause));
        }
    }
    let fail = |m: String| match mode {
        LemmaMode::Strict => Error::InternalContradiction(m),
        LemmaMode::Relaxed => Error::ConstructionFailed(m),
    };
    let h = inst.h;
    let n = h.n();
    // Orient so that a mixed pair has u ∈ A.
    let (u, u2, flipped) = if in_b[inst.u] && in_a[inst.u2] { (inst.u2, inst.u, true) } else { (inst.u, inst.u2, false) };
    let mut used = vec![false; n];
    used[u] = true;
    used[u2] = true;
    let mut p = vec![u];
    let mut p2 = vec![u2];
    let pick = |from: usize, want: &dyn Fn(usize) -> bool, used: &[bool]| -> Option<usize> {
        h.neighbours(from).iter().copied().find(|&x| !used[x] && want(x))
    };
    if in_b[u] && in_b[u2] {
        let x = pick(u, &|x| in_a[x] && !in_ap[x], &used).ok_or_else(|| fail(format!("{u} has no free neighbour in A \\ A'")))?;
        used[x] = true;
        p.push(x);
    } else if in_a[u] && in_a[u2] {
        let x = pick(u2, &|x| in_b[x], &used).ok_or_else(|| fail(format!("{u2} has no free neighbour in B")))?;
        used[x] = true;
        p2.push(x);
    }
    let free_b_deg = |v: usize, used: &[bool]| h.neighbours(v).iter().filter(|&&x| in_b[x] && !used[x]).count();
    let remaining = |side: &[bool], used: &[bool]| (0..n).filter(|&v| side[v] && !used[v]).count();
    loop {
        let (ra, rb) = (remaining(&in_a, &used), remaining(&in_b, &used));
        if ra == rb {
            break;
        }
        if ra < rb {
            return Err(fail(format!("after the stubs {ra} vertices remain in A but {rb} in B")));
        }
        let end = *p.last().expect("non-empty");
        let next = h
            .neighbours(end)
            .iter()
            .copied()
            .filter(|&x| in_a[x] && !in_ap[x] && !used[x])
            .min_by_key(|&x| (free_b_deg(x, &used), x))
            .ok_or_else(|| fail(format!("greedy walk stuck at {end}")))?;
        used[next] = true;
        p.push(next);
    }
    let w = *p.last().expect("non-empty");
    let w2 = *p2.last().expect("non-empty");
    let star: Vec<usize> = (0..n).filter(|&v| !used[v] || v == w || v == w2).collect();
    let mut idx = vec![usize::MAX; n];
    for (i, &v) in star.iter().enumerate() {
        idx[v] = i;
    }
    let mut bip_edges = Vec::new();
    for &x in &star {
        for &y in h.neighbours(x) {
            if x < y && in_a[x] != in_a[y] && idx[y] != usize::MAX {
                bip_edges.push((idx[x], idx[y]));
            }
        }
    }
    let h_star = SimpleGraph::from_edges(star.len(), bip_edges)?;
    let middle = match hamilton_path_between(&h_star, idx[w], idx[w2]) {
        Ok(Some(m)) => m,
        Ok(None) => return Err(fail("the bipartite remainder has no Hamilton w,w'-path".into())),
        Err(Error::InstanceTooLarge { .. } | Error::ConstructionFailed(_)) => {
            return Err(fail("no Hamilton w,w'-path found in the bipartite remainder".into()))
        }
        Err(e) => return Err(e),
    };
    let mut out = p;
    out.extend(middle[1..middle.len() - 1].iter().map(|&i| star[i]));
    out.extend(p2.iter().rev());
    if flipped {
        out.reverse();
    }
    if !is_hamilton_path(h, &out, inst.u, inst.u2) {
        return Err(fail("spliced sequence is not a Hamilton path".into()));
    }
    Ok(out)
}
