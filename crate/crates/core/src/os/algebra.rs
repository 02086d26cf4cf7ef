use std::collections::{BTreeMap, HashMap};

use crate::linalg::{MatQ, Rat};
use crate::matroid::{elements, HypSet, MatroidData};

/// Sparse coordinates in the NBC basis of one degree.
pub type Sparse = BTreeMap<usize, Rat>;

/// Central Orlik–Solomon algebra with its NBC monomial basis.
#[derive(Clone, Debug)]
pub struct OSAlgebra {
    matroid: MatroidData,
    index: HashMap<HypSet, usize>,
}

/// Sign of e_A ∧ e_B relative to e_(A ∪ B) for disjoint A, B.
pub fn wedge_sign(a: HypSet, b: HypSet) -> i32 {
    let inversions: u32 = elements(b)
        .into_iter()
        .map(|x| (a >> x).count_ones() - (a >> x & 1) as u32)
        .sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn add_scaled(acc: &mut Sparse, v: &Sparse, c: &Rat) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Rat::zero);
        *e = &*e + &(x * c);
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

impl OSAlgebra {
    pub fn new(matroid: &MatroidData) -> OSAlgebra {
        let index = matroid
            .nbc
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, &s)| (s, i)))
            .collect();
        OSAlgebra {
            matroid: matroid.clone(),
            index,
        }
    }

    pub fn matroid(&self) -> &MatroidData {
        &self.matroid
    }

    /// NBC basis in degree `i` (empty past the rank).
    pub fn basis(&self, i: usize) -> &[HypSet] {
        self.matroid.nbc.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, i: usize) -> usize {
        self.basis(i).len()
    }

    /// Coordinates of e_S (elements in increasing order) in the NBC basis.
    pub fn straighten(&self, s: HypSet) -> Vec<Rat> {
        let mut memo = HashMap::new();
        let sparse = self.straighten_with(s, &mut memo);
        let mut out = vec![Rat::zero(); self.dim(s.count_ones() as usize)];
        for (k, x) in sparse {
            out[k] = x;
        }
        out
    }

    /// Straightening with a caller-held memo, so bulk computations share work.
    pub fn straighten_with(&self, s: HypSet, memo: &mut HashMap<HypSet, Sparse>) -> Sparse {
        if let Some(v) = memo.get(&s) {
            return v.clone();
        }
        let out = self.straighten_uncached(s, memo);
        memo.insert(s, out.clone());
        out
    }

    fn straighten_uncached(&self, s: HypSet, memo: &mut HashMap<HypSet, Sparse>) -> Sparse {
        let m = &self.matroid;
        if !m.is_independent(s) {
            return Sparse::new();
        }
        if let Some(&i) = self.index.get(&s) {
            return Sparse::from([(i, Rat::one())]);
        }
        // Largest broken circuit inside S under graded-lex order.
        let b = m
            .broken_circuits
            .iter()
            .copied()
            .filter(|&b| b & s == b)
            .max_by_key(|&b| (b.count_ones(), elements(b)))
            .expect("independent non-NBC set contains a broken circuit");
        let circuit = m
            .circuits
            .iter()
            .copied()
            .find(|&c| c & !(c & c.wrapping_neg()) == b)
            .expect("broken circuit comes from a circuit");
        let c0 = circuit & circuit.wrapping_neg();
        let rest = s & !b;
        // e_S = sgn(B, R) e_B ∧ e_R and e_B = -Σ_{k≥1} (-1)^k e_(C \ c_k).
        let outer = wedge_sign(b, rest);
        let mut acc = Sparse::new();
        for (k, ck) in elements(circuit).into_iter().enumerate().skip(1) {
            let part = circuit & !(1 << ck);
            let sign = -outer * if k % 2 == 0 { 1 } else { -1 } * wedge_sign(part, rest);
            debug_assert!(part & c0 != 0);
            let sub = self.straighten_with(part | rest, memo);
            add_scaled(&mut acc, &sub, &Rat::from(sign as i64));
        }
        acc
    }

    /// Matrix of ∂: A^i → A^(i-1), ∂e_S = Σ_k (-1)^k e_(S \ s_k).
    pub fn boundary(&self, i: usize) -> MatQ {
        let rows = if i == 0 { 0 } else { self.dim(i - 1) };
        let mut out = MatQ::zeros(rows, self.dim(i));
        for (col, &s) in self.basis(i).iter().enumerate() {
            for (k, e) in elements(s).into_iter().enumerate() {
                let face = s & !(1 << e);
                let row = self.index[&face];
                out.set(row, col, Rat::from(if k % 2 == 0 { 1 } else { -1 }));
            }
        }
        out
    }

    /// Left multiplication by e_k on a sparse element of degree i.
    pub fn wedge_generator(&self, k: usize, w: &Sparse, i: usize, memo: &mut HashMap<HypSet, Sparse>) -> Sparse {
        let mut acc = Sparse::new();
        let basis = self.basis(i);
        for (idx, c) in w {
            let t = basis[*idx];
            if t >> k & 1 == 1 {
                continue;
            }
            let sign = wedge_sign(1 << k, t);
            let sub = self.straighten_with(t | 1 << k, memo);
            add_scaled(&mut acc, &sub, &(c * &Rat::from(sign as i64)));
        }
        acc
    }
}

/// Human-readable label of an NBC monomial, 1-based: "e1e3".
pub fn monomial_label(s: HypSet) -> String {
    if s == 0 {
        return "1".into();
    }
    elements(s).iter().map(|e| format!("e{}", e + 1)).collect()
}
