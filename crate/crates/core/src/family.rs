//! Taylor-series families of linear recursive sequences.
//!
//! A family is fixed by `q` and the coefficients `a_2..a_q`. Its member of
//! order `k` is the recursion whose characteristic polynomial is the degree-`k`
//! truncation of
//!
//! ```text
//! T(X) = 2 - 1/(1-X) - sum_{i=2}^{q} (a_i - 1) X^(i-1)
//! ```
//!
//! with the leading coefficient `-1` standing for the left-hand side `G_n`.
//! Every member starts from `G_1 = 1, G_2 = ... = G_k = 0`.
//!
//! All indices exposed by this module are 1-based.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;

/// The pair `(q, [a_2, ..., a_q])` defining a family. `q = 1` is the
/// degenerate family with no `a` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamilySpec")]
pub struct FamilySpec {
    q: usize,
    a: Vec<i64>,
}

#[derive(Deserialize)]
struct RawFamilySpec {
    q: i64,
    #[serde(default)]
    a: Vec<i64>,
}

impl TryFrom<RawFamilySpec> for FamilySpec {
    type Error = Error;

    fn try_from(raw: RawFamilySpec) -> Result<Self> {
        FamilySpec::new(raw.q, raw.a)
    }
}

impl FamilySpec {
    pub fn new(q: i64, a: Vec<i64>) -> Result<Self> {
        if q <= 0 {
            return Err(Error::InvalidQ(q));
        }
        let q = q as usize;
        if a.len() != q - 1 {
            return Err(Error::WrongCoefficientCount {
                expected: q - 1,
                got: a.len(),
            });
        }
        for (offset, &value) in a.iter().enumerate() {
            if value < 1 {
                return Err(Error::CoefficientBelowOne {
                    index: offset + 2,
                    value,
                });
            }
        }
        if let Some(&last) = a.last() {
            if last < 2 {
                return Err(Error::LastCoefficientTooSmall(last));
            }
        }
        Ok(Self { q, a })
    }

    /// The degenerate family `T(X) = 2 - 1/(1-X)`.
    pub fn degenerate() -> Self {
        Self { q: 1, a: Vec::new() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SpecJson(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family spec serializes")
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// The coefficients `a_2..a_q` (empty when `q = 1`).
    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// `a_i` for `2 <= i <= q`.
    pub fn a_at(&self, i: usize) -> i64 {
        assert!(i >= 2 && i <= self.q, "a_{i} is outside a_2..a_{}", self.q);
        self.a[i - 2]
    }

    pub fn is_degenerate(&self) -> bool {
        self.q == 1
    }

    /// Order of the member whose rectangle has `r` rows: `1 + r q`.
    pub fn k_of_r(&self, r: usize) -> Result<usize> {
        positive(r, "r")?;
        Ok(1 + r * self.q)
    }

    /// Column count of the `r`-row rectangle: `2 + (r - 1) q`.
    pub fn c_of_r(&self, r: usize) -> Result<usize> {
        positive(r, "r")?;
        Ok(2 + (r - 1) * self.q)
    }

    /// Predicted last nonzero column of rectangle row `t`: `2 + (t - 1) q`.
    pub fn l_of_t(&self, t: usize) -> Result<usize> {
        positive(t, "t")?;
        Ok(2 + (t - 1) * self.q)
    }

    /// Degree-`k` truncation of the family's series as a characteristic
    /// polynomial.
    pub fn char_poly(&self, k: usize) -> Result<TruncatedCharPoly> {
        if k < self.q {
            return Err(Error::OrderBelowQ { k, q: self.q });
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        coeffs.push(BigInt::one());
        coeffs.extend(self.a.iter().map(|&a| BigInt::from(-a)));
        coeffs.resize(k + 1, -BigInt::one());
        Ok(TruncatedCharPoly { coeffs })
    }

    /// Terms `G_1..G_{n_max}` of the order-`k` member.
    pub fn generate_sequence(&self, k: usize, n_max: usize) -> Result<SequenceWindow> {
        positive(k, "k")?;
        let poly = self.char_poly(k)?;
        SequenceWindow::generate(
            &poly,
            n_max,
            Provenance::Family {
                spec: self.clone(),
                k,
            },
        )
    }
}

pub(crate) fn positive(value: usize, name: &'static str) -> Result<usize> {
    if value == 0 {
        Err(Error::NotPositive { name })
    } else {
        Ok(value)
    }
}

/// Integer characteristic polynomial `c_0 + c_1 X + ... + c_k X^k` with
/// `c_k = -1`.
///
/// The coefficient of `X^j` multiplies `G_{n-k+j}` on the right-hand side of
/// the recursion, so `c_0` is the deepest lookback.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedCharPoly {
    coeffs: Vec<BigInt>,
}

impl TruncatedCharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        let leading = coeffs.last().ok_or(Error::EmptyCoefficients)?;
        if *leading != -BigInt::one() {
            return Err(Error::LeadingCoefficient(leading.clone()));
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Right-hand side weights `b_1..b_k` of `G_n = sum_m b_m G_{n-m}`,
    /// so `b_m = c_{k-m}`.
    pub fn recurrence_coeffs(&self) -> Vec<BigInt> {
        self.coeffs[..self.degree()].iter().rev().cloned().collect()
    }

    /// Coefficients of `(X - 1) p(X)`, degree `k + 1`.
    ///
    /// Any sequence annihilated by `p` (with `X` acting as the backward shift)
    /// is also annihilated by this product.
    pub fn mul_x_minus_1(&self) -> Vec<BigInt> {
        let k = self.degree();
        let mut out = vec![BigInt::zero(); k + 2];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j + 1] += c;
            out[j] -= c;
        }
        out
    }
}

/// Where a window's values came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Family { spec: FamilySpec, k: usize },
    Generic,
}

/// Exact terms `G_1..G_N` of one order-`k` recursion with the standard
/// initial values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceWindow {
    order: usize,
    values: Vec<BigInt>,
    provenance: Provenance,
}

impl SequenceWindow {
    /// Runs the recursion of `poly` from `G_1 = 1, G_2..G_k = 0` out to
    /// `G_{n_max}`.
    pub fn generate(poly: &TruncatedCharPoly, n_max: usize, provenance: Provenance) -> Result<Self> {
        let k = poly.degree();
        positive(k, "order")?;
        if n_max < k {
            return Err(Error::WindowTooShort { need: k, have: n_max });
        }
        let lookback = &poly.coeffs()[..k];
        let mut values = Vec::with_capacity(n_max);
        values.push(BigInt::one());
        values.resize(k, BigInt::zero());
        for n in k..n_max {
            // 0-based: G_{n+1} = sum_j c_j G_{n+1-k+j}
            let base = n - k;
            let mut acc = BigInt::zero();
            for (c, g) in lookback.iter().zip(&values[base..n]) {
                acc += c * g;
            }
            values.push(acc);
        }
        Ok(Self {
            order: k,
            values,
            provenance,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `G_n`, 1-based.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `(n, G_n)` pairs in order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            order: usize,
            provenance: &'a Provenance,
            #[serde(serialize_with = "json::big_vec")]
            terms: &'a [BigInt],
        }
        serde_json::to_string(&Out {
            order: self.order,
            provenance: &self.provenance,
            terms: &self.values,
        })
        .expect("window serializes")
    }
}
