//! Explicit model of the symmetric power `sl_n`-module `pi_{m w_1}`:
//! polynomials of degree `m` in `n` letters, with `E_{ab} = x_a d/dx_b`.

use std::collections::HashMap;

/// Basis: exponent vectors of total degree `m` in `n` letters; the highest
/// weight vector is `x_1^m` (index of the vector `(m,0,...,0)`).
pub struct SymPowerModule {
    pub n: usize,
    pub m: u32,
    basis: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl SymPowerModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn weight(&self, idx: usize) -> &[u8] {
        &self.basis[idx]
    }

    pub fn highest_weight_index(&self) -> usize {
        let mut hw = vec![0u8; self.n];
        hw[0] = self.m as u8;
        self.index[&hw]
    }

    /// `E_{ab}` applied to basis vector `idx` (0-based `a`, `b`, `a != b`):
    /// returns the target index and integer coefficient, or None if killed.
    pub fn apply_e(&self, a: usize, b: usize, idx: usize) -> Option<(usize, u32)> {
        let alpha = &self.basis[idx];
        let c = alpha[b];
        if c == 0 {
            return None;
        }
        let mut target = alpha.clone();
        target[b] -= 1;
        target[a] += 1;
        Some((self.index[&target], c as u32))
    }
}

/// Builds `pi_{m w_1}` for `sl_n`.
pub fn build_sym_module(n: usize, m: u32) -> SymPowerModule {
    assert!(n >= 2, "rank must be at least 2");
    let mut basis = Vec::new();
    let mut cur = vec![0u8; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u8;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u8;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, m, &mut cur, &mut basis);
    let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    SymPowerModule { n, m, basis, index }
}
