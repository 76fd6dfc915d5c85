//! Rectangles of consecutive sequence terms and the triangles embedded in them.
//!
//! A member of order `k = 1 + r q` lays out `G_{k+1}..G_{k+r c}` as `r` rows of
//! `c = 2 + (r - 1) q` columns. Multiplying the characteristic polynomial by
//! `X - 1` leaves only `q + 2` nonzero coefficients, and since
//! `k + 1 - q = c` the lookbacks that survive land exactly one row up. That is
//! the T recursion:
//!
//! ```text
//! R[t][s] = sum_{m=0}^{q} d_m R[t-1][s-m]
//! ```
//!
//! where column indices below 1 wrap to the tail of the row above and row 0
//! is all zeros.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{positive, FamilySpec, SequenceWindow};
use crate::json;

/// `rows x cols` block of exact integers, 1-based, whose first entry sits at
/// sequence index `origin`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rectangle {
    rows: usize,
    cols: usize,
    origin: usize,
    #[serde(serialize_with = "json::big_rows")]
    entries: Vec<Vec<BigInt>>,
}

impl Rectangle {
    pub fn new(origin: usize, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        positive(entries.len(), "rows")?;
        let cols = positive(entries[0].len(), "cols")?;
        if entries.iter().any(|row| row.len() != cols) {
            return Err(Error::RaggedRows);
        }
        Ok(Self {
            rows: entries.len(),
            cols,
            origin,
            entries,
        })
    }

    /// Lays out `rows * cols` consecutive terms of `window` starting at `G_origin`.
    pub fn from_window(window: &SequenceWindow, origin: usize, rows: usize, cols: usize) -> Result<Self> {
        positive(origin, "origin")?;
        positive(rows, "rows")?;
        positive(cols, "cols")?;
        let need = origin - 1 + rows * cols;
        if window.len() < need {
            return Err(Error::WindowTooShort {
                need,
                have: window.len(),
            });
        }
        let flat = &window.values()[origin - 1..need];
        let entries = flat.chunks(cols).map(<[BigInt]>::to_vec).collect();
        Ok(Self {
            rows,
            cols,
            origin,
            entries,
        })
    }

    fn from_flat(origin: usize, cols: usize, flat: Vec<BigInt>) -> Self {
        let entries: Vec<Vec<BigInt>> = flat.chunks(cols).map(<[BigInt]>::to_vec).collect();
        Self {
            rows: entries.len(),
            cols,
            origin,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    /// `R[t][s]`, 1-based.
    pub fn get(&self, t: usize, s: usize) -> &BigInt {
        &self.entries[t - 1][s - 1]
    }

    /// Row `t`, 1-based.
    pub fn row(&self, t: usize) -> &[BigInt] {
        &self.entries[t - 1]
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Entry at 1-based row-major position `f`, with every position `f <= 0`
    /// reading as zero (row 0 and anything before it).
    fn flat(&self, f: isize) -> BigInt {
        if f <= 0 {
            return BigInt::zero();
        }
        let f = f as usize - 1;
        self.entries[f / self.cols][f % self.cols].clone()
    }

    /// First `(t, s)` with `t >= 2` where the entry differs from the T
    /// recursion applied to the row above, if any.
    pub fn first_t_recursion_violation(&self, d: &TRecursionCoeffs) -> Option<(usize, usize)> {
        for t in 2..=self.rows {
            for s in 1..=self.cols {
                let f = ((t - 1) * self.cols + s) as isize;
                let predicted = d.apply(|m| self.flat(f - self.cols as isize - m as isize));
                if &predicted != self.get(t, s) {
                    return Some((t, s));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rectangle serializes")
    }
}

/// Last nonzero column of every row; `None` marks an all-zero row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleProfile {
    pub l: Vec<Option<usize>>,
    pub embedded: bool,
}

impl TriangleProfile {
    /// Profile of a rectangle. `embedded` holds when every row has a nonzero
    /// entry and the last-nonzero positions strictly increase.
    pub fn of(rect: &Rectangle) -> Self {
        let l: Vec<Option<usize>> = rect
            .entries
            .iter()
            .map(|row| row.iter().rposition(|v| !v.is_zero()).map(|i| i + 1))
            .collect();
        let embedded = l.iter().all(Option::is_some) && l.windows(2).all(|w| w[0] < w[1]);
        Self { l, embedded }
    }

    /// Defined positions, or the first undefined row.
    pub fn defined(&self) -> Result<Vec<usize>> {
        self.l
            .iter()
            .enumerate()
            .map(|(i, l)| l.ok_or(Error::UndefinedProfile { row: i + 1 }))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }
}

pub fn last_nonzero_profile(rect: &Rectangle) -> TriangleProfile {
    TriangleProfile::of(rect)
}

/// Weights `d_0..d_q` of the T recursion; `d_m` multiplies `R[t-1][s-m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TRecursionCoeffs {
    d: Vec<BigInt>,
}

impl TRecursionCoeffs {
    pub fn for_family(spec: &FamilySpec) -> Self {
        let q = spec.q();
        if spec.is_degenerate() {
            return Self {
                d: vec![BigInt::from(2), BigInt::from(-1)],
            };
        }
        let mut d = Vec::with_capacity(q + 1);
        d.push(BigInt::from(1 - spec.a_at(q)));
        for m in 1..=q.saturating_sub(2) {
            d.push(BigInt::from(spec.a_at(q - m + 1) - spec.a_at(q - m)));
        }
        d.push(BigInt::from(1 + spec.a_at(2)));
        d.push(-BigInt::one());
        Self { d }
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.d
    }

    pub fn lookback(&self) -> usize {
        self.d.len() - 1
    }

    /// `sum_m d_m * value(m)`, skipping zero weights.
    fn apply(&self, mut value: impl FnMut(usize) -> BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, w) in self.d.iter().enumerate() {
            if !w.is_zero() {
                acc += w * value(m);
            }
        }
        acc
    }
}

pub fn t_recursion_coeffs(spec: &FamilySpec) -> TRecursionCoeffs {
    TRecursionCoeffs::for_family(spec)
}

/// `[1, -1, 0, ..., 0]` of length `c(r)`.
pub fn first_row(spec: &FamilySpec, r: usize) -> Result<Vec<BigInt>> {
    let c = spec.c_of_r(r)?;
    let mut row = vec![BigInt::zero(); c];
    row[0] = BigInt::one();
    row[1] = -BigInt::one();
    Ok(row)
}

/// The rectangle of the order-`k(r)` member cut out of its sequence window.
pub fn extract_rectangle(window: &SequenceWindow, spec: &FamilySpec, r: usize) -> Result<Rectangle> {
    let k = spec.k_of_r(r)?;
    let c = spec.c_of_r(r)?;
    if window.order() != k {
        return Err(Error::OrderMismatch {
            expected: k,
            got: window.order(),
        });
    }
    Rectangle::from_window(window, k + 1, r, c)
}

/// The same rectangle built row by row with the T recursion, never touching
/// the order-`k` recursion. Row 1 comes from its closed form.
pub fn fill_rectangle_fast(spec: &FamilySpec, r: usize) -> Result<Rectangle> {
    let k = spec.k_of_r(r)?;
    let c = spec.c_of_r(r)?;
    let d = TRecursionCoeffs::for_family(spec);
    let mut flat = Vec::with_capacity(r * c);
    flat.extend(first_row(spec, r)?);
    for f in c..r * c {
        // 0-based f; the row above starts at f - c
        let next = d.apply(|m| {
            (f + 1)
                .checked_sub(c + m + 1)
                .map_or_else(BigInt::zero, |i| flat[i].clone())
        });
        flat.push(next);
    }
    Ok(Rectangle::from_flat(k + 1, c, flat))
}

/// Row index of the first disagreement between two profiled rectangles over
/// their shared rows, or `None` when they are compatible.
pub fn first_incompatible_row(a: &Rectangle, b: &Rectangle) -> Result<Option<usize>> {
    let la = TriangleProfile::of(a).defined()?;
    let lb = TriangleProfile::of(b).defined()?;
    for t in 1..=a.rows.min(b.rows) {
        let l = la[t - 1];
        if l != lb[t - 1] || a.row(t)[..l] != b.row(t)[..l] {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Equal last-nonzero positions and equal entries up to them on every shared
/// row.
pub fn compatible(a: &Rectangle, b: &Rectangle) -> Result<bool> {
    first_incompatible_row(a, b).map(|row| row.is_none())
}

/// Closed forms for `R[t][1]` and `R[t][l(t)]`.
pub fn corner_values(spec: &FamilySpec, t: usize) -> Result<(BigInt, BigInt)> {
    positive(t, "t")?;
    let ratio = if spec.is_degenerate() {
        BigInt::from(2)
    } else {
        BigInt::from(1 - spec.a_at(spec.q()))
    };
    let first = num_traits::pow(ratio, t - 1);
    let last = if t.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    Ok((first, last))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn rect(origin: usize, rows: &[&[i64]]) -> Rectangle {
        Rectangle::new(origin, rows.iter().map(|r| big(r)).collect()).unwrap()
    }

    fn example() -> FamilySpec {
        FamilySpec::new(3, vec![1, 25]).unwrap()
    }

    fn extracted(spec: &FamilySpec, r: usize) -> Rectangle {
        let k = spec.k_of_r(r).unwrap();
        let c = spec.c_of_r(r).unwrap();
        let window = spec.generate_sequence(k, k + r * c).unwrap();
        extract_rectangle(&window, spec, r).unwrap()
    }

    #[test]
    fn extract_tables() {
        let r2 = extracted(&example(), 2);
        assert_eq!(r2.row(1), big(&[1, -1, 0, 0, 0]));
        assert_eq!(r2.row(2), big(&[-24, 48, -22, -3, 1]));
        assert_eq!(r2.origin(), 8);

        let r3 = extracted(&example(), 3);
        assert_eq!(r3.row(3), big(&[576, -1728, 1632, -336, -188, 40, 5, -1]));

        let d = extracted(&FamilySpec::degenerate(), 3);
        assert_eq!(d, rect(5, &[&[1, -1, 0, 0], &[2, -3, 1, 0], &[4, -8, 5, -1]]));
    }

    #[test]
    fn extract_errors() {
        let spec = example();
        let window = spec.generate_sequence(7, 10).unwrap();
        assert_eq!(
            extract_rectangle(&window, &spec, 2),
            Err(Error::WindowTooShort { need: 17, have: 10 })
        );
        assert_eq!(
            extract_rectangle(&window, &spec, 3),
            Err(Error::OrderMismatch { expected: 10, got: 7 })
        );
    }

    #[test]
    fn first_row_examples() {
        assert_eq!(first_row(&example(), 1).unwrap(), big(&[1, -1]));
        assert_eq!(first_row(&example(), 3).unwrap(), big(&[1, -1, 0, 0, 0, 0, 0, 0]));
        let q2 = FamilySpec::new(2, vec![2]).unwrap();
        assert_eq!(first_row(&q2, 2).unwrap(), big(&[1, -1, 0, 0]));
        assert!(first_row(&q2, 0).is_err());
    }

    #[test]
    fn t_coeffs_examples() {
        assert_eq!(t_recursion_coeffs(&example()).as_slice(), big(&[-24, 24, 2, -1]));
        assert_eq!(t_recursion_coeffs(&FamilySpec::degenerate()).as_slice(), big(&[2, -1]));
        let q2 = FamilySpec::new(2, vec![2]).unwrap();
        assert_eq!(t_recursion_coeffs(&q2).as_slice(), big(&[-1, 3, -1]));
    }

    #[test]
    fn t_coeffs_match_shifted_annihilator() {
        // d_m is the coefficient of X^{q-m} in (X - 1) p_k, for any k > q
        let specs = [
            example(),
            FamilySpec::degenerate(),
            FamilySpec::new(2, vec![2]).unwrap(),
            FamilySpec::new(5, vec![3, 1, 6, 2]).unwrap(),
        ];
        for spec in specs {
            let q = spec.q();
            for k in [q + 1, q + 4, 1 + 3 * q] {
                let e = spec.char_poly(k).unwrap().mul_x_minus_1();
                let from_poly: Vec<BigInt> = (0..=q).map(|m| e[q - m].clone()).collect();
                assert_eq!(t_recursion_coeffs(&spec).as_slice(), from_poly, "q={q} k={k}");
                // all other coefficients except the leading one vanish
                assert!(e[q + 1..=k].iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn t_coeffs_sum_to_one() {
        // a constant row maps to the same constant, as (X - 1) kills constants
        for spec in [example(), FamilySpec::degenerate(), FamilySpec::new(4, vec![1, 1, 2]).unwrap()] {
            let d = t_recursion_coeffs(&spec);
            let total: BigInt = d.as_slice().iter().sum();
            assert_eq!(total, BigInt::one());
            let e = spec.char_poly(spec.k_of_r(2).unwrap()).unwrap().mul_x_minus_1();
            let below_leading: BigInt = e[..e.len() - 1].iter().sum();
            assert_eq!(total, below_leading);
        }
    }

    #[test]
    fn fast_fill_examples() {
        assert_eq!(fill_rectangle_fast(&example(), 3).unwrap(), extracted(&example(), 3));
        assert_eq!(
            fill_rectangle_fast(&FamilySpec::degenerate(), 3).unwrap(),
            rect(5, &[&[1, -1, 0, 0], &[2, -3, 1, 0], &[4, -8, 5, -1]])
        );
        let q2 = FamilySpec::new(2, vec![2]).unwrap();
        assert_eq!(
            fill_rectangle_fast(&q2, 2).unwrap(),
            rect(6, &[&[1, -1, 0, 0], &[-1, 4, -4, 1]])
        );
    }

    #[test]
    fn extracted_rectangles_satisfy_t_recursion() {
        let spec = example();
        let d = t_recursion_coeffs(&spec);
        let r3 = extracted(&spec, 3);
        assert_eq!(r3.first_t_recursion_violation(&d), None);
        let mut broken = r3.entries().to_vec();
        broken[2][4] += 1;
        let broken = Rectangle::new(r3.origin(), broken).unwrap();
        assert_eq!(broken.first_t_recursion_violation(&d), Some((3, 5)));
    }

    #[test]
    fn profiles() {
        let p = last_nonzero_profile(&extracted(&example(), 2));
        assert_eq!(p.l, vec![Some(2), Some(5)]);
        assert!(p.embedded);

        let p = last_nonzero_profile(&extracted(&FamilySpec::degenerate(), 3));
        assert_eq!(p.l, vec![Some(2), Some(3), Some(4)]);
        assert!(p.embedded);

        let p = last_nonzero_profile(&rect(1, &[&[0, 0]]));
        assert_eq!(p.l, vec![None]);
        assert!(!p.embedded);
        assert_eq!(p.to_json(), r#"{"l":[null],"embedded":false}"#);
        assert_eq!(p.defined(), Err(Error::UndefinedProfile { row: 1 }));

        let flat = last_nonzero_profile(&rect(1, &[&[1, 2], &[3, 4]]));
        assert_eq!(flat.l, vec![Some(2), Some(2)]);
        assert!(!flat.embedded);
    }

    #[test]
    fn compatibility() {
        let t2 = extracted(&example(), 2);
        let t3 = extracted(&example(), 3);
        let t4 = extracted(&FamilySpec::degenerate(), 3);
        assert!(compatible(&t2, &t3).unwrap());
        assert!(compatible(&t3, &t2).unwrap());
        assert!(compatible(&t3, &t3).unwrap());
        assert!(!compatible(&t2, &t4).unwrap());
        assert_eq!(first_incompatible_row(&t2, &t4).unwrap(), Some(2));
        assert_eq!(
            compatible(&t2, &rect(1, &[&[0, 0]])),
            Err(Error::UndefinedProfile { row: 1 })
        );
    }

    #[test]
    fn corners() {
        assert_eq!(corner_values(&example(), 3).unwrap(), (BigInt::from(576), BigInt::from(-1)));
        assert_eq!(corner_values(&example(), 1).unwrap(), (BigInt::from(1), BigInt::from(-1)));
        assert_eq!(
            corner_values(&FamilySpec::degenerate(), 3).unwrap(),
            (BigInt::from(4), BigInt::from(-1))
        );
        assert!(corner_values(&example(), 0).is_err());
    }

    #[test]
    fn rectangle_json() {
        let r = extracted(&example(), 1);
        assert_eq!(r.to_json(), r#"{"rows":1,"cols":2,"origin":5,"entries":[[1,-1]]}"#);
    }
}
