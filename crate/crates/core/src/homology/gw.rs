use std::collections::HashMap;

use super::{GammaClass, HomClass, ManifoldSpec, ProductKind, Side, SpecError};
use crate::field::{BaseField, Coefficient};

type GwKey = (GammaClass, usize, [usize; 3]);

/// Table entries under their block-sorted argument order.
#[derive(Clone, Debug)]
pub(crate) struct GwIndex<F> {
    map: HashMap<GwKey, F>,
}

impl<F> Default for GwIndex<F> {
    fn default() -> Self {
        GwIndex {
            map: HashMap::new(),
        }
    }
}

impl<F: Coefficient> GwIndex<F> {
    pub(crate) fn build(spec: &ManifoldSpec<F>) -> Self {
        let mut map = HashMap::new();
        for e in spec.gw_table() {
            if let Some((args, sign)) = canonical_args(spec, e.p, e.args) {
                map.entry((e.class.clone(), e.p, args))
                    .or_insert_with(|| e.value.clone() * sign);
            }
        }
        GwIndex { map }
    }
}

fn side_of(p: usize, slot: usize) -> Side {
    if slot < p {
        Side::Absolute
    } else {
        Side::Relative
    }
}

/// Sign ε(σ; a) of reordering `args` by `perm`: one factor −1 per inverted pair of odd classes.
pub fn permutation_sign<F: Coefficient>(odd: &[bool], perm: &[usize]) -> F {
    let mut flips = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && odd[perm[i]] && odd[perm[j]] {
                flips += 1;
            }
        }
    }
    F::sign(flips % 2 == 1)
}

/// Sorts each block, returning the sorted arguments and the sign relating the two
/// orders. `None` when a repeated odd class forces the invariant to vanish.
fn canonical_args<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    p: usize,
    args: [usize; 3],
) -> Option<([usize; 3], F)> {
    let odd: Vec<bool> = (0..3)
        .map(|k| spec.degree(side_of(p, k), args[k]) % 2 == 1)
        .collect();
    let mut perm = [0usize, 1, 2];
    perm[..p].sort_by_key(|&k| args[k]);
    perm[p..].sort_by_key(|&k| args[k]);
    for w in [&perm[..p], &perm[p..]] {
        for pair in w.windows(2) {
            let repeated = args[pair[0]] == args[pair[1]] && odd[pair[0]];
            if repeated && F::FIELD != BaseField::IntegersMod2 {
                return None;
            }
        }
    }
    let sorted = [args[perm[0]], args[perm[1]], args[perm[2]]];
    Some((sorted, permutation_sign(&odd, &perm)))
}

impl<F: Coefficient> ManifoldSpec<F> {
    /// `GW_{A,p,3}` on basis classes for `A ≠ 0`: the table value, extended to
    /// block permutations with sign; absent entries are zero.
    pub fn gw_lookup(&self, class: &GammaClass, p: usize, args: [usize; 3]) -> F {
        if p > 3 || class.is_zero() {
            return F::zero();
        }
        match canonical_args(self, p, args) {
            Some((sorted, sign)) => self
                .gw_index
                .map
                .get(&(class.clone(), p, sorted))
                .map_or_else(F::zero, |v| v.clone() * sign),
            None => F::zero(),
        }
    }

    /// `GW_{0,p,m}` computed from the intersection products, extended multilinearly.
    pub fn gw_zero(&self, p: usize, args: &[HomClass<F>]) -> Result<F, SpecError> {
        let m = args.len();
        if !(3..=4).contains(&m) || p > m {
            return Err(SpecError::Arity(format!(
                "GW_{{0,p,m}} needs m ∈ {{3,4}} arguments and p ≤ m, got m = {m}, p = {p}"
            )));
        }
        for (k, a) in args.iter().enumerate() {
            let want = if k < p {
                Side::Absolute
            } else {
                Side::Relative
            };
            if a.side() != want {
                return Err(SpecError::SideMismatch(format!(
                    "argument {} of GW_{{0,{p},{m}}} must be {want}",
                    k + 1
                )));
            }
        }
        let mut total = F::zero();
        let mut idx = vec![0usize; m];
        self.gw_zero_expand(p, args, 0, F::one(), &mut idx, &mut total);
        Ok(total)
    }

    fn gw_zero_expand(
        &self,
        p: usize,
        args: &[HomClass<F>],
        k: usize,
        weight: F,
        idx: &mut Vec<usize>,
        total: &mut F,
    ) {
        if k == args.len() {
            let v = self.gw_zero_basis(p, idx);
            *total = total.clone() + weight * v;
            return;
        }
        for (i, z) in args[k].terms() {
            idx[k] = i;
            self.gw_zero_expand(p, args, k + 1, weight.clone() * z.clone(), idx, total);
        }
    }

    /// `GW_{0,p,m}` on basis classes: the iterated product chain, read off at `[pt]`.
    pub fn gw_zero_basis(&self, p: usize, idx: &[usize]) -> F {
        let m = idx.len();
        let total: u32 = idx
            .iter()
            .enumerate()
            .map(|(k, &i)| self.degree(side_of(p, k), i))
            .sum();
        if p == 0 || total != self.dim() * (m as u32 - 1) {
            return F::zero();
        }
        let mut acc = HomClass::basis(Side::Absolute, idx[0]);
        for (k, &i) in idx.iter().enumerate().skip(1) {
            let side = side_of(p, k);
            let kind = match side {
                Side::Absolute => ProductKind::One,
                Side::Relative => ProductKind::Two,
            };
            acc = self
                .classical_bullet(kind, &acc, &HomClass::basis(side, i))
                .expect("chain operands have matching sides");
        }
        acc.coeff(self.point())
    }
}
