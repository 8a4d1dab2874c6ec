//! Seeded verification sweeps.
//!
//! Each proposition is checked over a grid of `(n, arity, kind)`
//! configurations. Trial `t` of a configuration draws its function from
//! `derive_seed(seed, [proposition, n, arity, kind, t])`, so reports depend
//! only on the arguments and never on scheduling or wall-clock time.

use std::fmt;
use std::ops::RangeInclusive;

use orchard_core::adapters::{
    closed_form_separation, score_parity_partition, tournament_to_signfn,
};
use orchard_core::combinatorics::checked_binomial;
use orchard_core::operators::{
    augment, build_f2_complex, double_augment_positive, double_reduce_constant, reduce,
};
use orchard_core::orchard::{mu, OrchardRelation};
use orchard_core::random::{below, derive_seed, rng};
use orchard_core::{Sign, SignFunction, SubsetCode, SymmetryKind, Tournament};
use serde::Serialize;

use crate::formats::{HomologyFile, SignFnFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Proposition {
    /// n(a,b) + n(b,c) + n(a,c) has the kind's parity; the relation is a
    /// two-class equivalence.
    Triple,
    /// A flip exchanges classes exactly across the flipset.
    Flip,
    /// For symmetric functions the class of x is the parity of mu(x).
    Mu,
    /// Reduction trivialises the relation for even d and keeps it for odd d.
    Reduce,
    /// Augmentation trivialises the relation iff n ≡ d (mod 2).
    Augment,
    /// Double reduction is the constant eps^C(n-d+1, 2).
    RrSign,
    /// Double augmentation is identically +1.
    AaPositive,
    /// The GF(2) complex has the homology of a point.
    Homology,
    /// Tournament separation counts match the closed form.
    TournamentClosedForm,
    /// Tournament classes are score parities.
    ScoreParity,
}

impl Proposition {
    pub const ALL: [Proposition; 10] = [
        Proposition::Triple,
        Proposition::Flip,
        Proposition::Mu,
        Proposition::Reduce,
        Proposition::Augment,
        Proposition::RrSign,
        Proposition::AaPositive,
        Proposition::Homology,
        Proposition::TournamentClosedForm,
        Proposition::ScoreParity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Proposition::Triple => "triple",
            Proposition::Flip => "flip",
            Proposition::Mu => "mu",
            Proposition::Reduce => "reduce",
            Proposition::Augment => "augment",
            Proposition::RrSign => "rr-sign",
            Proposition::AaPositive => "aa-positive",
            Proposition::Homology => "homology",
            Proposition::TournamentClosedForm => "tournament-closed-form",
            Proposition::ScoreParity => "score-parity",
        }
    }

    fn tag(self) -> u64 {
        Proposition::ALL.iter().position(|&p| p == self).unwrap() as u64
    }

    fn kinds(self) -> &'static [SymmetryKind] {
        match self {
            Proposition::Mu => &[SymmetryKind::Symmetric],
            Proposition::TournamentClosedForm | Proposition::ScoreParity => {
                &[SymmetryKind::Antisymmetric]
            }
            _ => &[SymmetryKind::Symmetric, SymmetryKind::Antisymmetric],
        }
    }

    /// Whether `(n, d)` lies in the domain of this check.
    fn applies(self, n: u32, d: u32) -> bool {
        match self {
            Proposition::Triple | Proposition::Flip | Proposition::Mu => n >= d + 2,
            Proposition::Reduce => d >= 1 && n >= d + 2,
            Proposition::Augment | Proposition::AaPositive => n >= d + 3,
            Proposition::RrSign => d >= 2 && n > d,
            Proposition::Homology => true,
            Proposition::TournamentClosedForm | Proposition::ScoreParity => n >= 3,
        }
    }

    /// Checks that ignore `d`.
    fn fixed_arity(self) -> Option<u32> {
        match self {
            Proposition::Homology => Some(0),
            Proposition::TournamentClosedForm | Proposition::ScoreParity => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Desk-scale bounds; `--unsafe` lifts them.
pub const MAX_N: u32 = 12;
pub const MAX_SUBSETS: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub proposition: Proposition,
    pub n: RangeInclusive<u32>,
    pub d: RangeInclusive<u32>,
    pub trials: u32,
    pub seed: u64,
    pub unsafe_sizes: bool,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SweepError {
    #[error("n = {0} exceeds the limit of {MAX_N} (use --unsafe to override)")]
    TooManyElements(u32),
    #[error("C({n}, {arity}) exceeds {MAX_SUBSETS} subsets (use --unsafe to override)")]
    TooManySubsets { n: u32, arity: u32 },
    #[error("no configuration in the requested ranges is in the domain of `{0}`")]
    Empty(Proposition),
    #[error("trials must be positive")]
    NoTrials,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub n: u32,
    pub arity: u32,
    pub kind: String,
    pub trials: u32,
    pub checks: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: u32,
    pub arity: u32,
    pub kind: String,
    pub trial: u32,
    pub trial_seed: u64,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flipset: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<SignFnFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub proposition: Proposition,
    pub seed: u64,
    pub trials: u32,
    pub configurations: Vec<Configuration>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<HomologyFile>>,
    pub failures: Vec<Failure>,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }
}

/// Seed of one trial.
pub fn trial_seed(
    seed: u64,
    prop: Proposition,
    n: u32,
    arity: u32,
    kind: SymmetryKind,
    trial: u32,
) -> u64 {
    let kind_tag = match kind {
        SymmetryKind::Symmetric => 0,
        SymmetryKind::Antisymmetric => 1,
    };
    derive_seed(
        seed,
        &[prop.tag(), n.into(), arity.into(), kind_tag, trial.into()],
    )
}

/// Flipset used by a `flip` trial.
pub fn trial_flipset(trial_seed: u64, n: u32, arity: u32) -> SubsetCode {
    let total = checked_binomial(n.into(), arity.into()).expect("guarded size");
    let mut r = rng(derive_seed(trial_seed, &[1]));
    SubsetCode::colex_unrank(below(&mut r, total), n, arity).expect("rank below total")
}

fn check_sizes(spec: &SweepSpec, n: u32, arity: u32) -> Result<(), SweepError> {
    if spec.unsafe_sizes {
        return Ok(());
    }
    if n > MAX_N {
        return Err(SweepError::TooManyElements(n));
    }
    // reduce and augment also touch arity - 1 and arity + 2
    let widest = (arity.saturating_sub(1)..=arity + 2)
        .filter(|&k| k <= n)
        .filter_map(|k| checked_binomial(n.into(), k.into()))
        .max()
        .unwrap_or(0);
    if widest > MAX_SUBSETS {
        return Err(SweepError::TooManySubsets { n, arity });
    }
    Ok(())
}

/// Outcome of one trial: number of elementary checks, or a failure detail.
type TrialResult = Result<u64, String>;

pub fn run(spec: &SweepSpec) -> Result<VerificationReport, SweepError> {
    if spec.trials == 0 {
        return Err(SweepError::NoTrials);
    }
    let prop = spec.proposition;
    let mut grid = Vec::new();
    for n in spec.n.clone() {
        match prop.fixed_arity() {
            Some(arity) => {
                if prop.applies(n, arity.saturating_sub(1)) {
                    grid.push((n, arity));
                }
            }
            None => {
                for d in spec.d.clone() {
                    if prop.applies(n, d) {
                        grid.push((n, d + 1));
                    }
                }
            }
        }
    }
    if grid.is_empty() {
        return Err(SweepError::Empty(prop));
    }
    for &(n, arity) in &grid {
        check_sizes(spec, n, arity)?;
    }

    let mut configurations = Vec::new();
    let mut failures = Vec::new();
    let mut homology = None;

    if prop == Proposition::Homology {
        let mut dims = Vec::new();
        for &(n, _) in &grid {
            let (checks, failure) = match build_f2_complex(n) {
                Ok(c) => {
                    let mut expected = vec![0; n as usize];
                    expected[0] = 1;
                    let failure = if !c.compositions_vanish() {
                        Some("boundary composition is nonzero".to_string())
                    } else if c.homology_dims() != expected {
                        Some(format!("homology dims {:?}", c.homology_dims()))
                    } else {
                        None
                    };
                    dims.push(HomologyFile::from(&c));
                    (u64::from(n), failure)
                }
                Err(e) => (0, Some(e.to_string())),
            };
            configurations.push(Configuration {
                n,
                arity: 0,
                kind: "symmetric".into(),
                trials: 1,
                checks,
            });
            if let Some(detail) = failure {
                failures.push(Failure {
                    n,
                    arity: 0,
                    kind: "symmetric".into(),
                    trial: 0,
                    trial_seed: 0,
                    detail,
                    flipset: None,
                    function: None,
                });
            }
        }
        homology = Some(dims);
    } else {
        for &(n, arity) in &grid {
            for &kind in prop.kinds() {
                let mut checks = 0;
                for trial in 0..spec.trials {
                    let seed = trial_seed(spec.seed, prop, n, arity, kind, trial);
                    let (result, function, flipset) = run_trial(prop, n, arity, kind, seed);
                    match result {
                        Ok(c) => checks += c,
                        Err(detail) => failures.push(Failure {
                            n,
                            arity,
                            kind: kind.as_str().into(),
                            trial,
                            trial_seed: seed,
                            detail,
                            flipset: flipset.map(SubsetCode::into_elements),
                            function: function.as_ref().map(SignFnFile::from),
                        }),
                    }
                }
                configurations.push(Configuration {
                    n,
                    arity,
                    kind: kind.as_str().into(),
                    trials: spec.trials,
                    checks,
                });
            }
        }
    }

    let status = if failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        proposition: prop,
        seed: spec.seed,
        trials: spec.trials,
        configurations,
        homology,
        failures,
        status,
    })
}

/// Runs one trial from its seed; also returns the data needed to reproduce it.
pub fn run_trial(
    prop: Proposition,
    n: u32,
    arity: u32,
    kind: SymmetryKind,
    seed: u64,
) -> (TrialResult, Option<SignFunction>, Option<SubsetCode>) {
    let f = match prop {
        Proposition::TournamentClosedForm | Proposition::ScoreParity => {
            Tournament::random(n, seed).and_then(|t| tournament_to_signfn(&t))
        }
        _ => SignFunction::random(n, arity, kind, seed),
    };
    let f = match f {
        Ok(f) => f,
        Err(e) => return (Err(e.to_string()), None, None),
    };
    let flipset = (prop == Proposition::Flip).then(|| trial_flipset(seed, n, arity));
    let result = check(prop, &f, flipset.as_ref()).map_err(|e| e.to_string());
    (result, Some(f), flipset)
}

#[derive(Debug)]
struct CheckFailure(String);

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<orchard_core::Error> for CheckFailure {
    fn from(e: orchard_core::Error) -> CheckFailure {
        CheckFailure(e.to_string())
    }
}

fn fail<T>(msg: String) -> Result<T, CheckFailure> {
    Err(CheckFailure(msg))
}

fn check(
    prop: Proposition,
    f: &SignFunction,
    flipset: Option<&SubsetCode>,
) -> Result<u64, CheckFailure> {
    let n = f.n();
    let d = f.d();
    let mut checks = 0u64;
    match prop {
        Proposition::Triple => {
            let rel = OrchardRelation::new(f)?;
            for a in 1..=n {
                for b in a + 1..=n {
                    for c in b + 1..=n {
                        if !rel.triple_identity_holds(a, b, c) {
                            return fail(format!("parity identity fails on ({a},{b},{c})"));
                        }
                        let (ab, bc, ac) =
                            (rel.related(a, b), rel.related(b, c), rel.related(a, c));
                        if (ab && bc && !ac) || (ab && ac && !bc) || (bc && ac && !ab) {
                            return fail(format!("transitivity fails on ({a},{b},{c})"));
                        }
                        checks += 2;
                    }
                }
            }
            // also asserts at most two classes
            rel.partition()?;
            checks += 1;
        }
        Proposition::Flip => {
            let flipset = flipset.expect("flip trial has a flipset");
            let before = OrchardRelation::new(f)?.partition()?;
            let after = OrchardRelation::new(&f.flip(flipset)?)?.partition()?;
            for a in 1..=n {
                for b in a + 1..=n {
                    let across = flipset.contains(a) != flipset.contains(b);
                    if (before.same_class(a, b) != after.same_class(a, b)) != across {
                        return fail(format!("pair ({a},{b}) violates the flip law at {flipset}"));
                    }
                    checks += 1;
                }
            }
        }
        Proposition::Mu => {
            let rel = OrchardRelation::new(f)?;
            let parities: Vec<u64> = (1..=n)
                .map(|x| mu(f, x).map(|m| m % 2))
                .collect::<Result<_, _>>()?;
            for a in 1..=n {
                for b in a + 1..=n {
                    let same = parities[a as usize - 1] == parities[b as usize - 1];
                    if rel.related(a, b) != same {
                        return fail(format!("pair ({a},{b}): relation and mu parity disagree"));
                    }
                    checks += 1;
                }
            }
        }
        Proposition::Reduce => {
            let reduced = OrchardRelation::new(&reduce(f)?)?.partition()?;
            if d.is_multiple_of(2) {
                if !reduced.is_single_class() {
                    return fail(format!(
                        "reduced relation not trivial: {:?}",
                        reduced.labels()
                    ));
                }
            } else {
                let original = OrchardRelation::new(f)?.partition()?;
                if reduced != original {
                    return fail(format!(
                        "reduced partition {:?} differs from {:?}",
                        reduced.labels(),
                        original.labels()
                    ));
                }
            }
            checks += 1;
        }
        Proposition::Augment => {
            let augmented = OrchardRelation::new(&augment(f)?)?.partition()?;
            if n % 2 == d % 2 {
                if !augmented.is_single_class() {
                    return fail(format!(
                        "augmented relation not trivial: {:?}",
                        augmented.labels()
                    ));
                }
            } else {
                let original = OrchardRelation::new(f)?.partition()?;
                if augmented != original {
                    return fail(format!(
                        "augmented partition {:?} differs from {:?}",
                        augmented.labels(),
                        original.labels()
                    ));
                }
            }
            checks += 1;
        }
        Proposition::RrSign => {
            let expected = match f.kind() {
                SymmetryKind::Symmetric => Sign::Positive,
                SymmetryKind::Antisymmetric => Sign::from_parity(
                    orchard_core::combinatorics::binomial(u64::from(n - d + 1), 2),
                ),
            };
            let got = double_reduce_constant(f)?;
            if got != expected {
                return fail(format!(
                    "double reduction constant {got}, expected {expected}"
                ));
            }
            checks += 1;
        }
        Proposition::AaPositive => {
            if !double_augment_positive(f)? {
                return fail("double augmentation has a negative value".into());
            }
            checks += 1;
        }
        Proposition::TournamentClosedForm => {
            let t = Tournament::from_signfn(f)?;
            let profile = OrchardRelation::new(f)?;
            for i in 1..=n {
                for j in i + 1..=n {
                    let closed = closed_form_separation(&t, i, j)?;
                    let counted = profile.profile().count(i, j);
                    if closed != counted {
                        return fail(format!(
                            "pair ({i},{j}): closed form {closed}, counted {counted}"
                        ));
                    }
                    if t.mod4_related(i, j) != profile.related(i, j) {
                        return fail(format!("pair ({i},{j}): mod 4 criterion disagrees"));
                    }
                    checks += 2;
                }
            }
        }
        Proposition::ScoreParity => {
            let t = Tournament::from_signfn(f)?;
            let by_score = score_parity_partition(&t)?;
            let by_count = OrchardRelation::new(f)?.partition()?;
            if by_score != by_count {
                return fail(format!(
                    "score parity {:?} differs from orchard partition {:?}",
                    by_score.labels(),
                    by_count.labels()
                ));
            }
            checks += 1;
        }
        Proposition::Homology => unreachable!("homology has no per-function trials"),
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(prop: Proposition, n: RangeInclusive<u32>, d: RangeInclusive<u32>) -> SweepSpec {
        SweepSpec {
            proposition: prop,
            n,
            d,
            trials: 5,
            seed: 9,
            unsafe_sizes: false,
        }
    }

    #[test]
    fn every_proposition_passes_a_small_sweep() {
        for prop in Proposition::ALL {
            let report = run(&spec(prop, 4..=7, 0..=3)).unwrap();
            assert!(report.passed(), "{prop}: {:?}", report.failures);
            assert!(!report.configurations.is_empty());
        }
    }

    #[test]
    fn domains_are_respected() {
        let r = run(&spec(Proposition::Reduce, 5..=5, 0..=3)).unwrap();
        let arities: Vec<u32> = r.configurations.iter().map(|c| c.arity).collect();
        assert_eq!(arities, vec![2, 2, 3, 3, 4, 4]);
        let r = run(&spec(Proposition::Mu, 5..=5, 1..=1)).unwrap();
        assert_eq!(r.configurations.len(), 1);
        assert_eq!(r.configurations[0].kind, "symmetric");
        assert_eq!(
            run(&spec(Proposition::Augment, 4..=4, 2..=3)).unwrap_err(),
            SweepError::Empty(Proposition::Augment)
        );
    }

    #[test]
    fn guardrails() {
        assert_eq!(
            run(&spec(Proposition::Triple, 13..=13, 1..=1)).unwrap_err(),
            SweepError::TooManyElements(13)
        );
        let mut s = spec(Proposition::Triple, 4..=4, 1..=1);
        s.trials = 0;
        assert_eq!(run(&s).unwrap_err(), SweepError::NoTrials);
        let mut s = spec(Proposition::Triple, 13..=13, 1..=1);
        s.unsafe_sizes = true;
        s.trials = 1;
        assert!(run(&s).unwrap().passed());
    }

    #[test]
    fn trials_are_reproducible_from_their_seed() {
        let seed = trial_seed(9, Proposition::Flip, 6, 3, SymmetryKind::Antisymmetric, 4);
        let (r1, f1, s1) = run_trial(Proposition::Flip, 6, 3, SymmetryKind::Antisymmetric, seed);
        let (r2, f2, s2) = run_trial(Proposition::Flip, 6, 3, SymmetryKind::Antisymmetric, seed);
        assert_eq!((r1, f1.clone(), s1.clone()), (r2, f2, s2));
        assert_eq!(
            f1.unwrap(),
            SignFunction::random(6, 3, SymmetryKind::Antisymmetric, seed).unwrap()
        );
        assert_eq!(s1.unwrap(), trial_flipset(seed, 6, 3));
    }

    #[test]
    fn reports_are_identical_across_runs() {
        let a = run(&spec(Proposition::Flip, 4..=6, 1..=2))
            .unwrap()
            .to_json();
        let b = run(&spec(Proposition::Flip, 4..=6, 1..=2))
            .unwrap()
            .to_json();
        assert_eq!(a, b);
    }
}
