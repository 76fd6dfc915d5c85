//! Clause-by-clause checks of the embedded-triangle theorem on concrete
//! family members, plus an explorer for arbitrary truncated series.
//!
//! Every check recomputes its rectangle from the order-`k` recursion and
//! compares against closed forms or the T recursion. A failure on a valid
//! family means a bug in this crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{positive, FamilySpec, Provenance, SequenceWindow, TruncatedCharPoly};
use crate::triangle::{
    corner_values, extract_rectangle, fill_rectangle_fast, first_incompatible_row, first_row,
    t_recursion_coeffs, Rectangle, TriangleProfile,
};

/// `true` iff `coeffs`, read as a shift-operator polynomial, annihilates the
/// window at every index where it reaches back far enough:
/// `sum_j coeffs[j] G_{n-d+j} = 0` for `d < n <= N`, `d = coeffs.len() - 1`.
pub fn check_satisfies_recurrence(window: &SequenceWindow, coeffs: &[BigInt]) -> Result<bool> {
    if coeffs.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let degree = coeffs.len() - 1;
    if window.len() <= degree {
        return Err(Error::WindowTooShort {
            need: degree + 1,
            have: window.len(),
        });
    }
    let holds = window.values().windows(degree + 1).all(|span| {
        let mut acc = BigInt::zero();
        for (c, g) in coeffs.iter().zip(span) {
            acc += c * g;
        }
        acc.is_zero()
    });
    Ok(holds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// Row 1 is `1, -1, 0, ..., 0`.
    FirstRow,
    /// The G-recursion rectangle obeys the T recursion and equals the fast fill.
    TRecursionEquivalence,
    /// `R[t][1] != 0`.
    FirstColumnNonzero,
    /// Last nonzero column of row `t` is `2 + (t - 1) q`.
    LFormula,
    /// Every row has a last nonzero entry and those positions strictly increase.
    Embedding,
    /// Rectangles of every pair of members agree on their shared triangle rows.
    PairwiseCompatibility,
    /// `R[t][1] = (-(a_q - 1))^(t-1)` (`2^(t-1)` when `q = 1`) and `R[t][l(t)] = (-1)^t`.
    CornerValues,
    /// `l(t+1) - l(t) = q`.
    ArithmeticProfile,
    /// The window is annihilated by `p_k` and by `(X - 1) p_k`.
    ShiftAnnihilator,
}

impl Clause {
    pub const ALL: [Clause; 9] = [
        Clause::FirstRow,
        Clause::TRecursionEquivalence,
        Clause::FirstColumnNonzero,
        Clause::LFormula,
        Clause::Embedding,
        Clause::PairwiseCompatibility,
        Clause::CornerValues,
        Clause::ArithmeticProfile,
        Clause::ShiftAnnihilator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Clause::FirstRow => "first_row",
            Clause::TRecursionEquivalence => "t_recursion_equivalence",
            Clause::FirstColumnNonzero => "first_column_nonzero",
            Clause::LFormula => "l_formula",
            Clause::Embedding => "embedding",
            Clause::PairwiseCompatibility => "pairwise_compatibility",
            Clause::CornerValues => "corner_values",
            Clause::ArithmeticProfile => "arithmetic_profile",
            Clause::ShiftAnnihilator => "shift_annihilator",
        }
    }
}

/// Location of a counterexample. Fields that do not apply are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub s: Option<usize>,
}

impl Witness {
    fn at(r: usize, t: Option<usize>, s: Option<usize>) -> Self {
        Self { r: Some(r), t, s }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: Clause,
    pub pass: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: FamilySpec,
    pub r_max: usize,
    pub pass: bool,
    pub clauses: Vec<ClauseResult>,
}

impl VerificationReport {
    pub fn clause(&self, clause: Clause) -> &ClauseResult {
        self.clauses
            .iter()
            .find(|c| c.clause == clause)
            .expect("every clause is reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseResult> {
        self.clauses.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Keeps the first witness seen for each clause.
struct Tally {
    witnesses: Vec<Option<Witness>>,
}

impl Tally {
    fn new() -> Self {
        Self {
            witnesses: vec![None; Clause::ALL.len()],
        }
    }

    fn fail(&mut self, clause: Clause, witness: Witness) {
        let slot = &mut self.witnesses[clause as usize];
        if slot.is_none() {
            *slot = Some(witness);
        }
    }

    fn check(&mut self, clause: Clause, ok: bool, witness: impl FnOnce() -> Witness) {
        if !ok {
            self.fail(clause, witness());
        }
    }

    fn finish(self, spec: &FamilySpec, r_max: usize) -> VerificationReport {
        let clauses: Vec<ClauseResult> = Clause::ALL
            .iter()
            .zip(self.witnesses)
            .map(|(&clause, witness)| ClauseResult {
                clause,
                pass: witness.is_none(),
                witness,
            })
            .collect();
        VerificationReport {
            spec: spec.clone(),
            r_max,
            pass: clauses.iter().all(|c| c.pass),
            clauses,
        }
    }
}

fn first_mismatch(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y).map(|i| i + 1)
}

fn check_member(spec: &FamilySpec, r: usize, tally: &mut Tally) -> Result<Rectangle> {
    let q = spec.q();
    let k = spec.k_of_r(r)?;
    let c = spec.c_of_r(r)?;
    let poly = spec.char_poly(k)?;
    let window = spec.generate_sequence(k, k + r * c)?;
    let rect = extract_rectangle(&window, spec, r)?;

    let expected_first = first_row(spec, r)?;
    if let Some(s) = first_mismatch(rect.row(1), &expected_first) {
        tally.fail(Clause::FirstRow, Witness::at(r, Some(1), Some(s)));
    }

    let d = t_recursion_coeffs(spec);
    if let Some((t, s)) = rect.first_t_recursion_violation(&d) {
        tally.fail(Clause::TRecursionEquivalence, Witness::at(r, Some(t), Some(s)));
    }
    let fast = fill_rectangle_fast(spec, r)?;
    for t in 1..=r {
        if let Some(s) = first_mismatch(rect.row(t), fast.row(t)) {
            tally.fail(Clause::TRecursionEquivalence, Witness::at(r, Some(t), Some(s)));
            break;
        }
    }

    let profile = TriangleProfile::of(&rect);
    for t in 1..=r {
        tally.check(Clause::FirstColumnNonzero, !rect.get(t, 1).is_zero(), || {
            Witness::at(r, Some(t), Some(1))
        });

        let predicted = spec.l_of_t(t)?;
        tally.check(Clause::LFormula, profile.l[t - 1] == Some(predicted), || {
            Witness::at(r, Some(t), profile.l[t - 1])
        });

        let (first, last) = corner_values(spec, t)?;
        tally.check(Clause::CornerValues, *rect.get(t, 1) == first, || {
            Witness::at(r, Some(t), Some(1))
        });
        tally.check(Clause::CornerValues, *rect.get(t, predicted) == last, || {
            Witness::at(r, Some(t), Some(predicted))
        });

        if t >= 2 {
            let step = match (profile.l[t - 2], profile.l[t - 1]) {
                (Some(prev), Some(cur)) => cur.checked_sub(prev),
                _ => None,
            };
            tally.check(Clause::ArithmeticProfile, step == Some(q), || {
                Witness::at(r, Some(t), profile.l[t - 1])
            });
        }
    }
    if !profile.embedded {
        let t = profile
            .l
            .iter()
            .position(Option::is_none)
            .or_else(|| profile.l.windows(2).position(|w| w[0] >= w[1]).map(|i| i + 1))
            .map(|i| i + 1);
        tally.fail(Clause::Embedding, Witness::at(r, t, None));
    }

    let satisfies_p = check_satisfies_recurrence(&window, poly.coeffs())?;
    let satisfies_shifted = check_satisfies_recurrence(&window, &poly.mul_x_minus_1())?;
    tally.check(Clause::ShiftAnnihilator, satisfies_p && satisfies_shifted, || {
        Witness::at(r, None, None)
    });

    Ok(rect)
}

/// Runs every clause for the members `r = 1..=r_max` of a family and for
/// every pair of them.
pub fn verify_family(spec: &FamilySpec, r_max: usize) -> Result<VerificationReport> {
    positive(r_max, "r_max")?;
    let mut tally = Tally::new();
    let rects = (1..=r_max)
        .map(|r| check_member(spec, r, &mut tally))
        .collect::<Result<Vec<_>>>()?;

    for (i, a) in rects.iter().enumerate() {
        for b in &rects[i + 1..] {
            match first_incompatible_row(a, b) {
                Ok(None) => {}
                Ok(Some(t)) => tally.fail(Clause::PairwiseCompatibility, Witness::at(b.rows(), Some(t), None)),
                Err(Error::UndefinedProfile { row }) => {
                    tally.fail(Clause::PairwiseCompatibility, Witness::at(b.rows(), Some(row), None))
                }
                Err(e) => return Err(e),
            }
        }
    }

    Ok(tally.finish(spec, r_max))
}

/// How the explorer treats the supplied degree-`k` Taylor coefficient.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum LeadingPolicy {
    /// The degree-`k` coefficient must already be `-1`.
    #[default]
    Strict,
    /// The degree-`k` slot is taken as `-1`, the left-hand side `G_n`,
    /// whatever the series says there. Coefficients `0..k` are used as given.
    Convention,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exploration {
    pub rectangle: Rectangle,
    pub profile: TriangleProfile,
}

impl Exploration {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("exploration serializes")
    }
}

/// Treats the degree-`k` truncation of an arbitrary Taylor series as a
/// characteristic polynomial, runs its recursion from the standard initial
/// values and reports the `rows x cols` rectangle starting at `G_{k+1}`
/// together with its last-nonzero profile.
pub fn explore_general(
    taylor_coeffs: &[BigInt],
    k: usize,
    rows: usize,
    cols: usize,
    policy: LeadingPolicy,
) -> Result<Exploration> {
    positive(k, "k")?;
    let needed = match policy {
        LeadingPolicy::Strict => k + 1,
        LeadingPolicy::Convention => k,
    };
    if taylor_coeffs.len() < needed {
        return Err(Error::InsufficientCoefficients {
            need: k,
            have: taylor_coeffs.len(),
        });
    }
    let mut coeffs = taylor_coeffs[..k].to_vec();
    match policy {
        LeadingPolicy::Strict => coeffs.push(taylor_coeffs[k].clone()),
        LeadingPolicy::Convention => coeffs.push(-BigInt::one()),
    }
    let poly = TruncatedCharPoly::from_coeffs(coeffs)?;
    positive(rows, "rows")?;
    positive(cols, "cols")?;
    let window = SequenceWindow::generate(&poly, k + rows * cols, Provenance::Generic)?;
    let rectangle = Rectangle::from_window(&window, k + 1, rows, cols)?;
    let profile = TriangleProfile::of(&rectangle);
    Ok(Exploration { rectangle, profile })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{family_series, rational_series};

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn example() -> FamilySpec {
        FamilySpec::new(3, vec![1, 25]).unwrap()
    }

    #[test]
    fn recurrence_check_examples() {
        let spec = example();
        let window = spec.generate_sequence(4, 40).unwrap();
        let p4 = spec.char_poly(4).unwrap();
        assert!(check_satisfies_recurrence(&window, p4.coeffs()).unwrap());
        assert!(check_satisfies_recurrence(&window, &p4.mul_x_minus_1()).unwrap());
        let mut perturbed = p4.coeffs().to_vec();
        perturbed[0] += 1;
        assert!(!check_satisfies_recurrence(&window, &perturbed).unwrap());
    }

    #[test]
    fn recurrence_check_errors() {
        let window = example().generate_sequence(4, 4).unwrap();
        assert_eq!(
            check_satisfies_recurrence(&window, &big(&[1, -1, -25, -1, -1])),
            Err(Error::WindowTooShort { need: 5, have: 4 })
        );
        assert_eq!(check_satisfies_recurrence(&window, &[]), Err(Error::EmptyCoefficients));
    }

    #[test]
    fn report_passes_for_examples() {
        for (spec, r_max) in [
            (example(), 3),
            (FamilySpec::degenerate(), 3),
            (FamilySpec::new(4, vec![1, 1, 2]).unwrap(), 5),
        ] {
            let report = verify_family(&spec, r_max).unwrap();
            assert!(report.pass, "{:?}", report.failures().collect::<Vec<_>>());
            assert_eq!(report.clauses.len(), Clause::ALL.len());
        }
    }

    #[test]
    fn report_json_layout() {
        let report = verify_family(&FamilySpec::degenerate(), 1).unwrap();
        let json = report.to_json();
        assert!(json.starts_with(r#"{"spec":{"q":1,"a":[]},"r_max":1,"pass":true,"clauses":[{"clause":"first_row","pass":true,"witness":null}"#));
    }

    #[test]
    fn failing_clause_carries_witness() {
        let mut tally = Tally::new();
        tally.fail(Clause::Embedding, Witness::at(2, Some(2), None));
        tally.fail(Clause::Embedding, Witness::at(3, Some(1), None));
        let report = tally.finish(&example(), 3);
        assert!(!report.pass);
        let embedding = report.clause(Clause::Embedding);
        assert_eq!(embedding.witness, Some(Witness::at(2, Some(2), None)));
        assert!(report.clause(Clause::FirstRow).pass);
        assert!(report
            .to_json()
            .contains(r#"{"clause":"embedding","pass":false,"witness":{"r":2,"t":2,"s":null}}"#));
    }

    #[test]
    fn verify_rejects_zero_r_max() {
        assert!(verify_family(&example(), 0).is_err());
    }

    #[test]
    fn explorer_reproduces_family_rectangles() {
        let degenerate = rational_series(&big(&[1, -2]), &big(&[1, -1]), 4).unwrap();
        let out = explore_general(&degenerate, 4, 3, 4, LeadingPolicy::Strict).unwrap();
        assert_eq!(out.rectangle.entries(), [big(&[1, -1, 0, 0]), big(&[2, -3, 1, 0]), big(&[4, -8, 5, -1])]);
        assert!(out.profile.embedded);

        let spec = example();
        let out = explore_general(&family_series(&spec, 10), 10, 3, 8, LeadingPolicy::Strict).unwrap();
        assert_eq!(out.rectangle.row(3), big(&[576, -1728, 1632, -336, -188, 40, 5, -1]));
    }

    #[test]
    fn explorer_errors() {
        let steep = rational_series(&big(&[1, -4]), &big(&[1, -2]), 4).unwrap();
        assert_eq!(
            explore_general(&steep, 4, 2, 2, LeadingPolicy::Strict),
            Err(Error::LeadingCoefficient(BigInt::from(-16)))
        );
        assert_eq!(
            explore_general(&big(&[1, -1]), 4, 2, 2, LeadingPolicy::Strict),
            Err(Error::InsufficientCoefficients { need: 4, have: 2 })
        );
    }
}
