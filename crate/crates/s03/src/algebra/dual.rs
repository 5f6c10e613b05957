//! Rewriting system for the dual algebra in the tilde generators L̃±_{ij}.
//!
//! Normal form: every L̃⁺ letter stands left of every L̃⁻ letter. A minus
//! letter moves right through a plus letter by one of sixteen exchange
//! rules, each of which swaps the pair into (plus, minus) with a sign and
//! possibly different indices; the inversion count strictly decreases, so
//! sorting terminates. Within a sign block the vanishing-monomial rules
//! apply: after 11 or 21 only 11 and 12 may follow, after 12 or 22 only 21
//! and 22; any other adjacency kills the word.

use crate::scalar::FieldK;
use num_traits::Zero;
use std::fmt;

/// Index pair of a tilde generator, `minus` distinguishing L̃⁻ from L̃⁺.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualGenerator {
    pub minus: bool,
    pub i: u8,
    pub j: u8,
}

impl DualGenerator {
    pub fn plus(i: u8, j: u8) -> Self {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j));
        DualGenerator { minus: false, i, j }
    }

    pub fn minus(i: u8, j: u8) -> Self {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j));
        DualGenerator { minus: true, i, j }
    }

    pub fn label(&self) -> String {
        format!("Lt{}{}{}", if self.minus { "-" } else { "+" }, self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DualWord(pub Vec<DualGenerator>);

impl fmt::Display for DualWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let labels: Vec<String> = self.0.iter().map(|g| g.label()).collect();
        write!(f, "{}", labels.join("."))
    }
}

/// Exchange rule for the adjacent pair L̃⁻_{m} · L̃⁺_{t}; returns
/// (sign flip, new plus indices, new minus indices).
fn exchange(m: (u8, u8), t: (u8, u8)) -> (bool, (u8, u8), (u8, u8)) {
    match (m, t) {
        ((1, 1), (1, 1)) => (false, (1, 1), (1, 1)),
        ((2, 1), (1, 1)) => (false, (2, 1), (1, 1)),
        ((1, 1), (1, 2)) => (false, (1, 1), (1, 2)),
        ((2, 1), (1, 2)) => (false, (2, 1), (1, 2)),
        ((1, 1), (2, 1)) => (false, (2, 1), (2, 2)),
        ((2, 1), (2, 1)) => (true, (1, 1), (2, 2)),
        ((1, 1), (2, 2)) => (false, (2, 1), (2, 1)),
        ((2, 1), (2, 2)) => (true, (1, 1), (2, 1)),
        ((1, 2), (1, 1)) => (true, (2, 2), (1, 2)),
        ((2, 2), (1, 1)) => (false, (1, 2), (1, 2)),
        ((1, 2), (1, 2)) => (true, (2, 2), (1, 1)),
        ((2, 2), (1, 2)) => (false, (1, 2), (1, 1)),
        ((1, 2), (2, 1)) => (false, (1, 2), (2, 1)),
        ((2, 2), (2, 1)) => (false, (2, 2), (2, 1)),
        ((1, 2), (2, 2)) => (false, (1, 2), (2, 2)),
        ((2, 2), (2, 2)) => (false, (2, 2), (2, 2)),
        _ => unreachable!("indices are in {{1,2}}"),
    }
}

/// Successor table of the vanishing-monomial rules within one sign block.
fn allowed_after(g: (u8, u8), next: (u8, u8)) -> bool {
    match g {
        (1, 1) | (2, 1) => matches!(next, (1, 1) | (1, 2)),
        (1, 2) | (2, 2) => matches!(next, (2, 1) | (2, 2)),
        _ => unreachable!(),
    }
}

fn has_vanishing_adjacency(w: &[DualGenerator]) -> bool {
    w.windows(2).any(|p| {
        p[0].minus == p[1].minus && !allowed_after((p[0].i, p[0].j), (p[1].i, p[1].j))
    })
}

/// Normal form of a single word: `None` when the word is zero in the
/// algebra, otherwise the sign and the sorted irreducible word.
pub fn word_normal_form(word: &DualWord) -> Option<(bool, DualWord)> {
    let mut w = word.0.clone();
    let mut neg = false;
    loop {
        if has_vanishing_adjacency(&w) {
            return None;
        }
        let Some(pos) = w.windows(2).position(|p| p[0].minus && !p[1].minus) else {
            return Some((neg, DualWord(w)));
        };
        let (flip, plus, minus) = exchange((w[pos].i, w[pos].j), (w[pos + 1].i, w[pos + 1].j));
        w[pos] = DualGenerator::plus(plus.0, plus.1);
        w[pos + 1] = DualGenerator::minus(minus.0, minus.1);
        neg ^= flip;
    }
}

/// A linear combination of normal-form dual words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DualElement {
    terms: std::collections::BTreeMap<DualWord, FieldK>,
}

impl DualElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: DualWord, coeff: FieldK) -> Self {
        let mut e = Self::zero();
        e.add_monomial(word, coeff);
        e
    }

    pub fn add_monomial(&mut self, word: DualWord, coeff: FieldK) {
        if coeff.is_zero() {
            return;
        }
        let Some((neg, nf)) = word_normal_form(&word) else {
            return;
        };
        let c = if neg { -coeff } else { coeff };
        match self.terms.remove(&nf) {
            None => {
                self.terms.insert(nf, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(nf, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DualWord, &FieldK)> {
        self.terms.iter()
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}", c, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgKind {
    F,
    G,
}

fn rep_push(w: &mut Vec<DualGenerator>, g: (u8, u8), count: usize) {
    for _ in 0..count {
        w.push(DualGenerator::plus(g.0, g.1));
    }
}

/// F_n(k;l) = Π_i 11^{k_i}·12·22^{l_i}·21 and
/// G_n(l;k) = Π_i 22^{l_i}·21·11^{k_i}·12, as plus-words.
pub fn fg_word(kind: FgKind, k: &[usize], l: &[usize]) -> DualWord {
    assert_eq!(k.len(), l.len());
    let mut w = Vec::new();
    for idx in 0..k.len() {
        match kind {
            FgKind::F => {
                rep_push(&mut w, (1, 1), k[idx]);
                w.push(DualGenerator::plus(1, 2));
                rep_push(&mut w, (2, 2), l[idx]);
                w.push(DualGenerator::plus(2, 1));
            }
            FgKind::G => {
                rep_push(&mut w, (2, 2), l[idx]);
                w.push(DualGenerator::plus(2, 1));
                rep_push(&mut w, (1, 1), k[idx]);
                w.push(DualGenerator::plus(1, 2));
            }
        }
    }
    DualWord(w)
}

/// Right-hand sides of the eight ordering formulas: the image of
/// L̃⁻_{ij}·F_n(k;l) (resp. ·G_n(l;k)) as (sign, word ending in one minus
/// letter). The sign factors are (−1)^(K_n+L_n) with K_n = Σk, L_n = Σl.
fn fg_action_formula(kind: FgKind, gen: (u8, u8), k: &[usize], l: &[usize]) -> (bool, DualWord) {
    let n = k.len();
    assert!(n >= 1);
    let ksum: usize = k.iter().sum();
    let lsum: usize = l.iter().sum();
    let parity = (ksum + lsum) % 2 == 1;
    let mut w = Vec::new();
    let mut sign = false;
    let trailing;
    match (kind, gen) {
        (FgKind::F, (1, 1)) => {
            // blocks 11^{e_j}·12·22^{l_j} with e_1 = k_1+1, joined by 21
            for j in 0..n {
                rep_push(&mut w, (1, 1), k[j] + usize::from(j == 0));
                w.push(DualGenerator::plus(1, 2));
                rep_push(&mut w, (2, 2), l[j]);
                if j + 1 < n {
                    w.push(DualGenerator::plus(2, 1));
                }
            }
            trailing = (2, 1);
        }
        (FgKind::F, (1, 2)) => {
            sign = !parity;
            for j in 0..n {
                rep_push(&mut w, (2, 2), k[j] + usize::from(j == 0));
                w.push(DualGenerator::plus(2, 1));
                rep_push(&mut w, (1, 1), l[j]);
                if j + 1 < n {
                    w.push(DualGenerator::plus(1, 2));
                }
            }
            trailing = (2, 2);
        }
        (FgKind::F, (2, 1)) => {
            w.push(DualGenerator::plus(2, 1));
            for j in 0..n {
                rep_push(&mut w, (1, 1), k[j]);
                w.push(DualGenerator::plus(1, 2));
                rep_push(&mut w, (2, 2), l[j]);
                if j + 1 < n {
                    w.push(DualGenerator::plus(2, 1));
                }
            }
            trailing = (2, 1);
        }
        (FgKind::F, (2, 2)) => {
            sign = parity;
            for j in 0..n {
                if j > 0 {
                    rep_push(&mut w, (1, 1), l[j - 1]);
                }
                w.push(DualGenerator::plus(1, 2));
                rep_push(&mut w, (2, 2), k[j]);
                w.push(DualGenerator::plus(2, 1));
            }
            rep_push(&mut w, (1, 1), l[n - 1]);
            trailing = (2, 2);
        }
        (FgKind::G, (1, 1)) => {
            sign = parity;
            for j in 0..n {
                if j > 0 {
                    rep_push(&mut w, (2, 2), k[j - 1]);
                }
                w.push(DualGenerator::plus(2, 1));
                rep_push(&mut w, (1, 1), l[j]);
                w.push(DualGenerator::plus(1, 2));
            }
            rep_push(&mut w, (2, 2), k[n - 1]);
            trailing = (1, 1);
        }
        (FgKind::G, (1, 2)) => {
            for j in 0..n {
                if j > 0 {
                    rep_push(&mut w, (1, 1), k[j - 1]);
                }
                w.push(DualGenerator::plus(1, 2));
                rep_push(&mut w, (2, 2), l[j]);
                w.push(DualGenerator::plus(2, 1));
            }
            rep_push(&mut w, (1, 1), k[n - 1]);
            trailing = (1, 2);
        }
        (FgKind::G, (2, 1)) => {
            sign = !parity;
            for j in 0..n {
                rep_push(&mut w, (1, 1), l[j] + usize::from(j == 0));
                w.push(DualGenerator::plus(1, 2));
                rep_push(&mut w, (2, 2), k[j]);
                if j + 1 < n {
                    w.push(DualGenerator::plus(2, 1));
                }
            }
            trailing = (1, 1);
        }
        (FgKind::G, (2, 2)) => {
            for j in 0..n {
                rep_push(&mut w, (2, 2), l[j] + usize::from(j == 0));
                w.push(DualGenerator::plus(2, 1));
                rep_push(&mut w, (1, 1), k[j]);
                if j + 1 < n {
                    w.push(DualGenerator::plus(1, 2));
                }
            }
            trailing = (1, 2);
        }
        _ => unreachable!(),
    }
    w.push(DualGenerator::minus(trailing.0, trailing.1));
    (sign, DualWord(w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgRangeError {
    pub n: usize,
}

impl fmt::Display for FgRangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F/G check limited to n <= 2 with exponents <= 2 (got n = {})", self.n)
    }
}

impl std::error::Error for FgRangeError {}

/// Verify the eight ordering formulas for L̃⁻_{ij}·F_n(k;l) and
/// L̃⁻_{ij}·G_n(l;k) against the rewrite engine, sign factors included.
pub fn verify_fg_action(n: usize, k: &[usize], l: &[usize]) -> Result<bool, FgRangeError> {
    if n > 2 || k.len() != n || l.len() != n || k.iter().chain(l.iter()).any(|&e| e > 2) {
        return Err(FgRangeError { n });
    }
    if n == 0 {
        // F_0 = G_0 = 1: the action is the generator itself on both sides
        return Ok(true);
    }
    for kind in [FgKind::F, FgKind::G] {
        let base = fg_word(kind, k, l);
        for gen in [(1u8, 1u8), (1, 2), (2, 1), (2, 2)] {
            let mut lhs_word = vec![DualGenerator::minus(gen.0, gen.1)];
            lhs_word.extend_from_slice(&base.0);
            let lhs = word_normal_form(&DualWord(lhs_word));
            let (sign, rhs_word) = fg_action_formula(kind, gen, k, l);
            let rhs = word_normal_form(&rhs_word).map(|(neg, w)| (neg ^ sign, w));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(gens: &[(bool, u8, u8)]) -> DualWord {
        DualWord(
            gens.iter()
                .map(|&(m, i, j)| DualGenerator { minus: m, i, j })
                .collect(),
        )
    }

    #[test]
    fn zero_rules() {
        // L̃⁺₁₁·L̃⁺₂₂ = 0
        assert!(word_normal_form(&word(&[(false, 1, 1), (false, 2, 2)])).is_none());
        // (L̃⁺₁₂)² = 0
        assert!(word_normal_form(&word(&[(false, 1, 2), (false, 1, 2)])).is_none());
        // same rules on the minus side
        assert!(word_normal_form(&word(&[(true, 2, 1), (true, 2, 1)])).is_none());
        // allowed words survive
        assert!(word_normal_form(&word(&[(false, 1, 1), (false, 1, 2)])).is_some());
    }

    #[test]
    fn exchange_example() {
        // L̃⁻₂₁·L̃⁺₂₁ = −L̃⁺₁₁·L̃⁻₂₂
        let (neg, nf) = word_normal_form(&word(&[(true, 2, 1), (false, 2, 1)])).unwrap();
        assert!(neg);
        assert_eq!(nf, word(&[(false, 1, 1), (true, 2, 2)]));
    }

    #[test]
    fn sorting_never_leaves_vanishing_monomials() {
        // exhaustive: all minus-plus-plus words of length 3 sort to either
        // zero or a word with all plus letters left and no forbidden pair
        let idx = [(1u8, 1u8), (1, 2), (2, 1), (2, 2)];
        for m in idx {
            for p1 in idx {
                for p2 in idx {
                    let w = word(&[
                        (true, m.0, m.1),
                        (false, p1.0, p1.1),
                        (false, p2.0, p2.1),
                    ]);
                    if let Some((_, nf)) = word_normal_form(&w) {
                        assert!(!has_vanishing_adjacency(&nf.0));
                        let first_minus = nf.0.iter().position(|g| g.minus);
                        if let Some(fm) = first_minus {
                            assert!(nf.0[fm..].iter().all(|g| g.minus));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fg_words_are_basis_monomials() {
        for n in 1..=2 {
            let k = vec![1; n];
            let l = vec![2; n];
            for kind in [FgKind::F, FgKind::G] {
                let w = fg_word(kind, &k, &l);
                let (neg, nf) = word_normal_form(&w).expect("basis words are nonzero");
                assert!(!neg);
                assert_eq!(nf, w);
            }
        }
    }

    #[test]
    fn fg_actions_all_small_parameters() {
        for n in 0..=2usize {
            let exps: Vec<Vec<usize>> = match n {
                0 => vec![vec![]],
                1 => (0..=2).map(|a| vec![a]).collect(),
                _ => {
                    let mut v = Vec::new();
                    for a in 0..=2 {
                        for b in 0..=2 {
                            v.push(vec![a, b]);
                        }
                    }
                    v
                }
            };
            for k in &exps {
                for l in &exps {
                    assert!(
                        verify_fg_action(n, k, l).unwrap(),
                        "formula mismatch at n={n}, k={k:?}, l={l:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn fg_range_enforced() {
        assert!(verify_fg_action(3, &[0, 0, 0], &[0, 0, 0]).is_err());
        assert!(verify_fg_action(1, &[3], &[0]).is_err());
    }
}
