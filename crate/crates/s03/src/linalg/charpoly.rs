//! Exact characteristic polynomials via Faddeev–LeVerrier, with the limited
//! integer factorisation needed to print the spin-chain spectra in factored
//! form (powers of x, integer roots in x², perfect powers).

use super::Mat;
use crate::scalar::FieldK;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Monic characteristic polynomial, coefficients ascending from λ⁰.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<FieldK>,
}

/// Faddeev–LeVerrier: O(n⁴) ring operations, divisions only by integers.
pub fn charpoly(m: &Mat<FieldK>) -> CharPoly {
    assert!(m.is_square(), "characteristic polynomial needs a square matrix");
    let n = m.rows();
    let mut coeffs = vec![FieldK::zero(); n + 1];
    coeffs[n] = FieldK::one();
    let mut aux: Mat<FieldK> = Mat::identity(n);
    for k in 1..=n {
        let am = m.matmul(&aux);
        let c = -(am.trace().checked_div(&FieldK::from_int(k as i64)).unwrap());
        coeffs[n - k] = c.clone();
        if k < n {
            aux = am;
            for i in 0..n {
                aux[(i, i)] = aux[(i, i)].clone() + c.clone();
            }
        }
    }
    CharPoly { coeffs }
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &FieldK) -> FieldK {
        let mut acc = FieldK::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Cayley–Hamilton evaluation p(M).
    pub fn eval_matrix(&self, m: &Mat<FieldK>) -> Mat<FieldK> {
        let n = m.rows();
        let mut acc: Mat<FieldK> = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(m);
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c.clone();
            }
        }
        acc
    }

    /// Build Π(λ − root) from an explicit root list.
    pub fn from_roots(roots: &[FieldK]) -> Self {
        let mut coeffs = vec![FieldK::one()];
        for r in roots {
            let mut next = vec![FieldK::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + c.clone();
                next[k] = next[k].clone() - c.clone() * r.clone();
            }
            coeffs = next;
        }
        CharPoly { coeffs }
    }

    /// Expand `x^pow_x · Π fᵢ(x)^mᵢ` from integer coefficient lists
    /// (ascending); used to pin expected spectra in tests and reports.
    pub fn from_integer_factors(pow_x: usize, factors: &[(Vec<i64>, usize)]) -> Self {
        let mut acc = vec![BigRational::one()];
        for (f, mult) in factors {
            let fi: Vec<BigRational> =
                f.iter().map(|&c| BigRational::from_integer(c.into())).collect();
            for _ in 0..*mult {
                acc = poly_mul(&acc, &fi);
            }
        }
        let mut coeffs = vec![FieldK::zero(); pow_x];
        coeffs.extend(acc.into_iter().map(|c| {
            FieldK::new(
                crate::scalar::GaussRational::new(c, BigRational::zero()),
                crate::scalar::GaussRational::zero(),
            )
        }));
        CharPoly { coeffs }
    }

    /// Exact square root as a polynomial, if one exists.
    pub fn perfect_square_root(&self) -> Option<CharPoly> {
        let d = self.degree();
        if d % 2 != 0 || !self.coeffs[d].is_one() {
            return None;
        }
        let m = d / 2;
        let mut q = vec![FieldK::zero(); m + 1];
        q[m] = FieldK::one();
        let two_inv = FieldK::ratio(1, 2);
        for j in 1..=m {
            // match the coefficient of λ^(2m−j)
            let mut s = FieldK::zero();
            for a in (m - j + 1)..=m {
                let b = 2 * m - j - a;
                if b > m {
                    continue;
                }
                if b > m - j {
                    s = s + q[a].clone() * q[b].clone();
                }
            }
            q[m - j] = (self.coeffs[2 * m - j].clone() - s) * two_inv.clone();
        }
        let cand = CharPoly { coeffs: q };
        let sq = poly_mul_k(&cand.coeffs, &cand.coeffs);
        if sq == self.coeffs {
            Some(cand)
        } else {
            None
        }
    }

    pub fn is_perfect_square(&self) -> bool {
        self.perfect_square_root().is_some()
    }

    /// Integer coefficients, if the polynomial lies in Z[λ].
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.as_rational()?;
                if r.denom().is_one() {
                    Some(r.numer().clone())
                } else {
                    None
                }
            })
            .collect()
    }

    /// Restricted exact factorisation over Z[x]: strips the power of x,
    /// requires the rest to be even, then pulls out integer roots in y = x²
    /// and finally recognises a perfect power. Returns `None` when the
    /// polynomial does not fit this pattern.
    pub fn factored(&self) -> Option<Factored> {
        let ints = self.integer_coeffs()?;
        let pow_x = ints.iter().take_while(|c| c.is_zero()).count();
        if pow_x > self.degree() {
            // zero polynomial cannot occur for a monic charpoly
            return None;
        }
        let rest: Vec<BigInt> = ints[pow_x..].to_vec();
        if rest.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        let mut q: Vec<BigInt> = rest.iter().step_by(2).cloned().collect();
        let mut factors: Vec<(Vec<BigInt>, usize)> = Vec::new();
        // integer roots of the monic polynomial q(y)
        loop {
            if q.len() <= 1 {
                break;
            }
            if q[0].is_zero() {
                // y | q would mean extra powers of x missed above
                return None;
            }
            let mut found = None;
            'outer: for cand in divisors(&q[0]) {
                for root in [cand.clone(), -cand] {
                    if poly_eval_int(&q, &root).is_zero() {
                        found = Some(root);
                        break 'outer;
                    }
                }
            }
            match found {
                Some(root) => {
                    q = poly_divide_linear(&q, &root);
                    push_factor(&mut factors, vec![-root, BigInt::one()]);
                }
                None => break,
            }
        }
        if q.len() > 1 {
            // try to recognise q = g(y)^k
            let deg = q.len() - 1;
            let mut recognised = false;
            for k in (2..=deg).rev() {
                if deg % k != 0 {
                    continue;
                }
                if let Some(g) = poly_kth_root(&q, k) {
                    push_factor_mult(&mut factors, g, k);
                    recognised = true;
                    break;
                }
            }
            if !recognised {
                if q.len() > 1 {
                    push_factor(&mut factors, q.clone());
                }
            }
        }
        Some(Factored { pow_x, factors })
    }

    /// Human-readable expanded form (descending powers) when the
    /// coefficients are plain rationals; falls back to the generic scalar
    /// rendering otherwise.
    pub fn expanded_string(&self, var: &str) -> String {
        let rational = self.coeffs.iter().all(|c| c.is_rational());
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = if rational {
                let r = c.as_rational().unwrap();
                let mag = r.abs();
                let mag_str = if mag.denom().is_one() {
                    format!("{}", mag.numer())
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                };
                let body = match (k, mag.is_one()) {
                    (0, _) => mag_str,
                    (1, true) => var.to_string(),
                    (1, false) => format!("{mag_str}{var}"),
                    (_, true) => format!("{var}^{k}"),
                    (_, false) => format!("{mag_str}{var}^{k}"),
                };
                (r.is_negative(), body)
            } else {
                let body = match k {
                    0 => format!("({c})"),
                    1 => format!("({c}){var}"),
                    _ => format!("({c}){var}^{k}"),
                };
                (false, body)
            };
            if out.is_empty() {
                if term.0 {
                    out.push('-');
                }
            } else {
                out.push(if term.0 { '-' } else { '+' });
            }
            out.push_str(&term.1);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn push_factor(factors: &mut Vec<(Vec<BigInt>, usize)>, f: Vec<BigInt>) {
    push_factor_mult(factors, f, 1);
}

fn push_factor_mult(factors: &mut Vec<(Vec<BigInt>, usize)>, f: Vec<BigInt>, k: usize) {
    for (g, m) in factors.iter_mut() {
        if *g == f {
            *m += k;
            return;
        }
    }
    factors.push((f, k));
}

/// Factored form `x^pow_x · Π fᵢ(y)^mᵢ` with y = x².
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factored {
    pub pow_x: usize,
    /// factors in y = x², ascending integer coefficients, with multiplicity
    pub factors: Vec<(Vec<BigInt>, usize)>,
}

impl Factored {
    /// Render like `x^2*(x^2+4)` or `(x^2+1)^8*(x^6+19x^4+83x^2+1)^8`.
    pub fn render(&self, var: &str) -> String {
        let mut parts = Vec::new();
        if self.pow_x == 1 {
            parts.push(var.to_string());
        } else if self.pow_x > 1 {
            parts.push(format!("{var}^{}", self.pow_x));
        }
        for (f, m) in &self.factors {
            let body = poly_in_x_squared_string(f, var);
            if *m == 1 {
                parts.push(format!("({body})"));
            } else {
                parts.push(format!("({body})^{m}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn poly_in_x_squared_string(f: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (j, c) in f.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let xpow = 2 * j;
        let mag = c.abs();
        let body = match (xpow, mag.is_one()) {
            (0, _) => format!("{mag}"),
            (_, true) => format!("{var}^{xpow}"),
            (_, false) => format!("{mag}{var}^{xpow}"),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if c.is_negative() { '-' } else { '+' });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_mul_k(a: &[FieldK], b: &[FieldK]) -> Vec<FieldK> {
    let mut out = vec![FieldK::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
    }
    out
}

fn poly_eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divide the monic polynomial p by (y − root); assumes exact divisibility.
fn poly_divide_linear(p: &[BigInt], root: &BigInt) -> Vec<BigInt> {
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for k in (0..n).rev() {
        let c = &p[k + 1] + &carry;
        q[k] = c.clone();
        carry = c * root;
    }
    debug_assert!((&p[0] + carry).is_zero());
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    // coefficient magnitudes in scope here are small
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Integer k-th root of a monic integer polynomial, if any.
fn poly_kth_root(q: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    let d = q.len() - 1;
    if d % k != 0 || !q[d].is_one() {
        return None;
    }
    let e = d / k;
    let mut g: Vec<BigRational> = vec![BigRational::zero(); e + 1];
    g[e] = BigRational::one();
    for j in 1..=e {
        // coefficient of y^(d−j) in g^k: known part plus k·g[e−j]
        let mut partial = vec![BigRational::zero(); e + 1];
        for (idx, val) in g.iter().enumerate() {
            partial[idx] = val.clone();
        }
        partial[e - j] = BigRational::zero();
        let pk = poly_pow(&partial, k);
        let target = BigRational::from_integer(q[d - j].clone());
        let known = pk.get(d - j).cloned().unwrap_or_else(BigRational::zero);
        g[e - j] = (target - known) / BigRational::from_integer(k.into());
    }
    let gk = poly_pow(&g, k);
    let q_rat: Vec<BigRational> = q.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    if gk.len() != q_rat.len() || gk != q_rat {
        return None;
    }
    g.into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Some(c.numer().clone())
            } else {
                None
            }
        })
        .collect()
}

fn poly_pow(p: &[BigRational], k: usize) -> Vec<BigRational> {
    let mut acc = vec![BigRational::one()];
    for _ in 0..k {
        acc = poly_mul(&acc, p);
    }
    acc
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expanded_string("x"))
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_zero_2x2() {
        let m: Mat<FieldK> = Mat::zeros(2, 2);
        let p = charpoly(&m);
        assert_eq!(p.coeffs, vec![FieldK::zero(), FieldK::zero(), FieldK::one()]);
        assert_eq!(p.to_string(), "x^2");
    }

    #[test]
    fn charpoly_of_diagonal() {
        // diag(ρ1, ρ2) → (λ−ρ1)(λ−ρ2)
        let m: Mat<FieldK> = Mat::from_int_rows(&[&[3, 0], &[0, 5]]);
        let p = charpoly(&m);
        let expected = CharPoly::from_roots(&[FieldK::from_int(3), FieldK::from_int(5)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn cayley_hamilton_small() {
        let m: Mat<FieldK> = Mat::from_int_rows(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 2]]);
        let p = charpoly(&m);
        assert!(p.eval_matrix(&m).is_zero_matrix());
    }

    #[test]
    fn perfect_square_detection() {
        // (x²+1)² is a square, x²(x²+4) = x⁴+4x² is not
        let sq = CharPoly::from_integer_factors(0, &[(vec![1, 0, 1], 2)]);
        assert!(sq.is_perfect_square());
        let nsq = CharPoly::from_integer_factors(2, &[(vec![4, 0, 1], 1)]);
        assert!(!nsq.is_perfect_square());
    }

    #[test]
    fn factored_rendering() {
        let p = CharPoly::from_integer_factors(0, &[(vec![1, 0, 1], 2)]);
        assert_eq!(p.factored().unwrap().render("x"), "(x^2+1)^2");

        let p2 = CharPoly::from_integer_factors(2, &[(vec![4, 0, 1], 1)]);
        assert_eq!(p2.factored().unwrap().render("x"), "x^2*(x^2+4)");

        // mixed: (x²+5)⁴(x²+1)⁴
        let p3 = CharPoly::from_integer_factors(0, &[(vec![5, 0, 1], 4), (vec![1, 0, 1], 4)]);
        let f3 = p3.factored().unwrap();
        let rendered = f3.render("x");
        assert!(rendered == "(x^2+1)^4*(x^2+5)^4" || rendered == "(x^2+5)^4*(x^2+1)^4");

        // perfect power with a non-linear base in x²
        let p4 = CharPoly::from_integer_factors(0, &[(vec![4, 0, 8, 0, 1], 8)]);
        let f4 = p4.factored().unwrap();
        assert_eq!(f4.render("x"), "(x^4+8x^2+4)^8");
    }
}
