//! Critical-pair bookkeeping with the Gebauer–Möller update (product and
//! chain criteria). Selection is the normal strategy: smallest lcm degree,
//! ties broken by the pair's indices.

use crate::poly::Monomial;

#[derive(Clone, Debug)]
pub(crate) struct Pair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

#[derive(Default, Debug)]
pub(crate) struct PairSet {
    pairs: Vec<Pair>,
}

impl PairSet {
    pub(crate) fn new() -> Self {
        PairSet { pairs: Vec::new() }
    }

    #[cfg(test)]
    pub(crate) fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Removes and returns the pair with the smallest `(deg lcm, i, j)`.
    pub(crate) fn pop(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm.degree(), p.i, p.j))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    /// Registers a new basis element with leading monomial `lms[new]`, where
    /// `lms[..new]` are the existing leading monomials.
    pub(crate) fn update(&mut self, lms: &[Monomial], new: usize) {
        let h = &lms[new];

        // chain criterion on old pairs
        self.pairs.retain(|p| {
            !(h.divides(&p.lcm) && h.lcm(&lms[p.i]) != p.lcm && h.lcm(&lms[p.j]) != p.lcm)
        });

        // candidates with the new element
        let mut candidates: Vec<Pair> =
            (0..new).map(|g| Pair { i: g, j: new, lcm: h.lcm(&lms[g]) }).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(c) = candidates.pop() {
            let coprime = h.is_coprime(&lms[c.i]);
            let dominated = candidates.iter().chain(kept.iter()).any(|o| o.lcm.divides(&c.lcm));
            if coprime || !dominated {
                kept.push(c);
            }
        }
        // product criterion
        kept.retain(|p| !h.is_coprime(&lms[p.i]));
        kept.sort_by_key(|p| p.i);
        self.pairs.extend(kept);
    }
}
