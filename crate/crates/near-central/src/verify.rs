//! Cross-validation suites: every closed form in the library checked
//! against an independent route at desk scale.
//!
//! Each suite pits a formula against an oracle that shares none of its
//! code path — character rules against explicit representation
//! matrices, spectral sums against exhaustive factorization censuses,
//! generating polynomials against rotation-system scans — and reports a
//! single verdict with a comparison count. The CLI `verify` subcommand
//! and the acceptance tests both drive [`run_all`].

use crate::algebra::gamma::{gamma_element, GammaTable};
use crate::algebra::group::{jm_element, GroupAlgebraElement};
use crate::algebra::z1::{structure_constants, ClassMembers, Z1Element};
use crate::characters::classical::{hook_leg, mn_character, near_hook_leg};
use crate::characters::closed::{
    content_poly_sum, content_product_poly, genchar_at_full_cycle, genchar_at_k_n11,
    genchar_two_part, TwoPartFamily,
};
use crate::characters::seminormal::genchar_oracle;
use crate::characters::series::{genchar_hook_series, HookTag};
use crate::characters::strahov::genchar_strahov;
use crate::dipoles::{
    brute_force_p_q_dipoles, dipole_count_formula, face_table_formula, genus_histogram_formula,
    genus_series, symmetry_check,
};
use crate::decomposition::{brute_decomposition_table, decomposition_count};
use crate::partition::{tagged_classes, Partition, TaggedClass};
use crate::poly::{binomial_poly, Poly};
use crate::tableau::tagged_corner;
use crate::{factorial, int, rat, Int, Rat};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckReport {
    /// One-line rendering, stable across runs.
    pub fn line(&self) -> String {
        format!(
            "{} {} — {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.details
        )
    }
}

/// Size caps for the suites. `n_max` bounds the symmetric groups swept
/// by oracle comparisons; `max_brute_n` is the hard resource guard
/// handed to every factorial-scale enumeration. Suites never exceed
/// their own design ceilings (idempotents stop at n = 5, dipole censuses
/// at n = 8, …) no matter how large the caps are.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub n_max: u32,
    pub max_brute_n: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 6, max_brute_n: 8 }
    }
}

impl VerifyConfig {
    fn cap(&self, ceiling: u32) -> u32 {
        ceiling.min(self.n_max).min(self.max_brute_n)
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "generalized-characters",
    "idempotents",
    "connection-coefficients",
    "dipole-counts",
    "genus-symmetry",
    "cycle-decompositions",
    "identity-suite",
];

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Option<CheckReport> {
    match name {
        "generalized-characters" => Some(check_gencharacters(config)),
        "idempotents" => Some(check_idempotents(config)),
        "connection-coefficients" => Some(check_connection(config)),
        "dipole-counts" => Some(check_dipoles(config)),
        "genus-symmetry" => Some(check_symmetry(config)),
        "cycle-decompositions" => Some(check_decomposition(config)),
        "identity-suite" => Some(check_identities(config)),
        _ => None,
    }
}

/// Runs every suite in order.
pub fn run_all(config: &VerifyConfig) -> Vec<CheckReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, config).expect("listed suite"))
        .collect()
}

/// Comparison tally with a truncated failure log.
struct Audit {
    checked: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Audit {
    fn new() -> Self {
        Audit { checked: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(msg());
            }
        }
    }

    fn eq<T: PartialEq>(&mut self, a: &T, b: &T, msg: impl FnOnce() -> String) {
        self.check(a == b, msg);
    }

    fn absorb(&mut self, other: Audit) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < 5 {
                self.failures.push(f);
            }
        }
    }

    fn report(self, name: &'static str, scope: String) -> CheckReport {
        if self.failed == 0 {
            CheckReport {
                name,
                passed: true,
                details: format!("{}; {} comparisons", scope, self.checked),
            }
        } else {
            CheckReport {
                name,
                passed: false,
                details: format!(
                    "{}; {} of {} comparisons failed; first: {}",
                    scope,
                    self.failed,
                    self.checked,
                    self.failures.join(" | ")
                ),
            }
        }
    }
}

fn class_n11(n: u32) -> TaggedClass {
    TaggedClass::new(Partition::new(vec![n - 1, 1]), 1)
}

fn class_full(n: u32) -> TaggedClass {
    TaggedClass::new(Partition::new(vec![n]), n)
}

fn class_two_part(n: u32, p: u32) -> TaggedClass {
    TaggedClass::new(Partition::new(vec![p, n - p]), p)
}

/// Criterion: the Strahov rule, the seminormal-trace oracle, and every
/// applicable closed form produce identical generalized characters.
fn check_gencharacters(config: &VerifyConfig) -> CheckReport {
    let cap = config.n_max.min(6);
    let mut audit = Audit::new();
    for n in 2..=cap {
        let classes = tagged_classes(n);
        let per_rho: Vec<Audit> = classes
            .par_iter()
            .map(|rho| {
                let mut audit = Audit::new();
                let rho_hook = hook_leg(rho.shape());
                let rho_near = near_hook_leg(rho.shape());
                for class in &classes {
                    let value = genchar_strahov(rho, class);
                    audit.eq(&value, &genchar_oracle(rho, class), || {
                        format!("oracle disagrees at γ^({})_({})", rho, class)
                    });
                    if *class == class_n11(n) {
                        audit.eq(&value, &genchar_at_k_n11(rho.shape(), rho.tag()), || {
                            format!("(n-1,1) closed form at γ^({})_({})", rho, class)
                        });
                    }
                    if *class == class_full(n) {
                        audit.eq(&value, &genchar_at_full_cycle(rho.shape(), rho.tag()), || {
                            format!("full-cycle closed form at γ^({})_({})", rho, class)
                        });
                    }
                    if let Some(k) = rho_hook {
                        if rho.tag() == n - k && k <= n - 2 {
                            audit.eq(
                                &value,
                                &genchar_hook_series(n, k, HookTag::Row, class.shape(), class.tag()),
                                || format!("R-series at γ^({})_({})", rho, class),
                            );
                        }
                        if rho.tag() == 1 && k >= 1 {
                            audit.eq(
                                &value,
                                &genchar_hook_series(
                                    n,
                                    k,
                                    HookTag::Column,
                                    class.shape(),
                                    class.tag(),
                                ),
                                || format!("S-series at γ^({})_({})", rho, class),
                            );
                        }
                    }
                    if class.shape().num_parts() == 2 {
                        let p = class.tag();
                        if let Some(k) = rho_hook {
                            if rho.tag() == n - k && k <= n - 2 {
                                audit.eq(
                                    &value,
                                    &genchar_two_part(TwoPartFamily::HookRow, n, k, p),
                                    || format!("two-part hook-row at γ^({})_({})", rho, class),
                                );
                            }
                            if rho.tag() == 1 && k >= 1 {
                                audit.eq(
                                    &value,
                                    &genchar_two_part(TwoPartFamily::HookCol, n, k, p),
                                    || format!("two-part hook-col at γ^({})_({})", rho, class),
                                );
                            }
                        }
                        if let Some(k) = rho_near {
                            if rho.tag() == 2 && p >= 2 {
                                audit.eq(
                                    &value,
                                    &genchar_two_part(TwoPartFamily::NearHook, n, k, p),
                                    || format!("two-part near-hook at γ^({})_({})", rho, class),
                                );
                            }
                        }
                    }
                }
                audit
            })
            .collect();
        for a in per_rho {
            audit.absorb(a);
        }
    }
    audit.report("generalized-characters", format!("n <= {}", cap))
}

/// Criterion: Γ^{λ,i}Γ^{μ,j} = δ·Γ^{λ,i} and Σ Γ = 1, expanded over the
/// group algebra.
fn check_idempotents(config: &VerifyConfig) -> CheckReport {
    let cap = config.cap(5);
    let mut audit = Audit::new();
    for n in 2..=cap {
        let classes = tagged_classes(n);
        let gammas: Vec<GroupAlgebraElement> = classes
            .par_iter()
            .map(|c| gamma_element(c, config.max_brute_n).expect("within guard"))
            .collect();
        let pairs: Vec<(usize, usize)> = (0..classes.len())
            .flat_map(|a| (0..classes.len()).map(move |b| (a, b)))
            .collect();
        let per_pair: Vec<Audit> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let mut audit = Audit::new();
                let prod = gammas[a]
                    .multiply(&gammas[b], config.max_brute_n)
                    .expect("within guard");
                if a == b {
                    audit.eq(&prod, &gammas[a], || {
                        format!("Γ^({}) is not idempotent at n = {}", classes[a], n)
                    });
                } else {
                    audit.check(prod.is_zero(), || {
                        format!("Γ^({})Γ^({}) is nonzero at n = {}", classes[a], classes[b], n)
                    });
                }
                audit
            })
            .collect();
        for a in per_pair {
            audit.absorb(a);
        }
        let total = gammas
            .iter()
            .fold(GroupAlgebraElement::zero(n), |acc, g| acc.add(g));
        audit.eq(&total, &GroupAlgebraElement::one(n), || {
            format!("Σ Γ is not the identity at n = {}", n)
        });
    }
    audit.report("idempotents", format!("n <= {}", cap))
}

/// Criterion: the generalized-character sum for c^{ν,k}_{(λ,i),(μ,j)}
/// equals the brute-force structure constants, all triples.
fn check_connection(config: &VerifyConfig) -> CheckReport {
    let cap = config.cap(6);
    let mut audit = Audit::new();
    for n in 2..=cap {
        let table = GammaTable::build(n);
        let members = ClassMembers::build(n, config.max_brute_n).expect("within guard");
        let classes = tagged_classes(n);
        let per_left: Vec<Audit> = classes
            .par_iter()
            .map(|left| {
                let mut audit = Audit::new();
                for right in &classes {
                    let brute = structure_constants(&members, left, right);
                    for target in &classes {
                        audit.eq(
                            &table.connection_coefficient(left, right, target),
                            &brute[target],
                            || format!("c^({}) of K_({})K_({})", target, left, right),
                        );
                    }
                }
                audit
            })
            .collect();
        for a in per_left {
            audit.absorb(a);
        }
    }
    audit.report("connection-coefficients", format!("n <= {}, all triples", cap))
}

/// Criterion: dipole counts by formula equal the rotation-system census
/// per face class and per genus, totals (n−2)!; plus the Z₁(n) encoding
/// of the count as a structure constant.
fn check_dipoles(config: &VerifyConfig) -> CheckReport {
    let brute_cap = config.cap(8);
    let mut audit = Audit::new();
    for n in 4..=brute_cap {
        for p in 1..=n - 1 {
            let (faces, hist) =
                brute_force_p_q_dipoles(n, p, n - 1, config.max_brute_n).expect("within guard");
            let per_class: Vec<Audit> = tagged_classes(n)
                .par_iter()
                .map(|class| {
                    let mut audit = Audit::new();
                    let expected = faces.get(class).cloned().unwrap_or_else(Int::zero);
                    audit.eq(&dipole_count_formula(class, p), &expected, || {
                        format!("d^({},{}) at ({})", p, n - 1, class)
                    });
                    audit
                })
                .collect();
            for a in per_class {
                audit.absorb(a);
            }
            audit.eq(&hist.total(), &factorial(n - 2), || {
                format!("census total at n = {}, p = {}", n, p)
            });
            if p >= 2 {
                audit.eq(&genus_histogram_formula(n, p), &hist, || {
                    format!("genus histogram at n = {}, p = {}", n, p)
                });
            }
        }
    }
    // Z1-encoding: [K_{(p,n-p),p}] K_{λ,i} K_{(n-1,1),1} counts the
    // dipoles with face class (λ,i)
    let encode_cap = config.cap(7);
    for n in 2..=encode_cap {
        let members = ClassMembers::build(n, config.max_brute_n).expect("within guard");
        let faces_by_p: Vec<BTreeMap<TaggedClass, Int>> = (1..=n - 1)
            .map(|p| {
                brute_force_p_q_dipoles(n, p, n - 1, config.max_brute_n)
                    .expect("within guard")
                    .0
            })
            .collect();
        for left in tagged_classes(n) {
            let products = structure_constants(&members, &left, &class_n11(n));
            for p in 1..=n - 1 {
                let expected = faces_by_p[(p - 1) as usize]
                    .get(&left)
                    .cloned()
                    .unwrap_or_else(Int::zero);
                audit.eq(&products[&class_two_part(n, p)], &expected, || {
                    format!("Z1 encoding at n = {}, p = {}, class ({})", n, p, left)
                });
            }
        }
    }
    audit.report(
        "dipole-counts",
        format!("census n <= {}, encoding n <= {}", brute_cap, encode_cap),
    )
}

/// Criterion: D_{n,p} = D_{n,n+1−p} exactly for n ≤ 40, total mass and
/// parity structure, and a face-type witness showing the symmetry does
/// not refine to face degree sequences.
fn check_symmetry(config: &VerifyConfig) -> CheckReport {
    let mut audit = Audit::new();
    let poly_cap = config.n_max.max(40).min(60);
    for n in 4..=poly_cap {
        for (p, p_mirror, equal) in symmetry_check(n) {
            audit.check(equal, || {
                format!("D_{{{},{}}} != D_{{{},{}}}", n, p, n, p_mirror)
            });
        }
    }
    for n in 4..=12u32 {
        for p in 2..=n - 1 {
            let d = genus_series(n, p);
            audit.eq(&d.evaluate(&rat(1)), &rat(1), || {
                format!("D_{{{},{}}}(1) != 1", n, p)
            });
            for m in 0..=d.degree().unwrap_or(0) {
                if (n as usize).abs_diff(m) % 2 == 1 {
                    audit.check(d.coeff(m).is_zero(), || {
                        format!("parity violated by [t^{}] D_{{{},{}}}", m, n, p)
                    });
                }
            }
        }
    }
    // face-type asymmetry witness
    let witness_cap = config.n_max.min(7);
    let mut witness = None;
    'search: for n in 4..=witness_cap {
        for p in 2..=n / 2 {
            let low = face_table_formula(n, p);
            let high = face_table_formula(n, n + 1 - p);
            for class in tagged_classes(n) {
                let a = low.get(&class).cloned().unwrap_or_else(Int::zero);
                let b = high.get(&class).cloned().unwrap_or_else(Int::zero);
                if a != b {
                    witness = Some(format!(
                        "face class ({}) splits {} vs {} between p = {} and p = {} at n = {}",
                        class,
                        a,
                        b,
                        p,
                        n + 1 - p,
                        n
                    ));
                    break 'search;
                }
            }
        }
    }
    audit.check(witness.is_some(), || {
        format!("no face-type asymmetry witness up to n = {}", witness_cap)
    });
    let scope = match &witness {
        Some(w) => format!("polynomials n <= {}; witness: {}", poly_cap, w),
        None => format!("polynomials n <= {}", poly_cap),
    };
    audit.report("genus-symmetry", scope)
}

/// Criterion: the generating-series count of full-cycle factorizations
/// equals brute force for every pair, including structural zeros, and
/// agrees with the connection-coefficient route.
fn check_decomposition(config: &VerifyConfig) -> CheckReport {
    let cap = config.cap(7);
    let mut audit = Audit::new();
    for n in 2..=cap {
        let table = brute_decomposition_table(n, config.max_brute_n).expect("within guard");
        let classes = tagged_classes(n);
        let spectral = if n <= 6 { Some(GammaTable::build(n)) } else { None };
        let per_left: Vec<Audit> = classes
            .par_iter()
            .map(|left| {
                let mut audit = Audit::new();
                for right in &classes {
                    let formula = decomposition_count(left, right);
                    let brute = &table[&(left.clone(), right.clone())];
                    audit.eq(&formula, brute, || {
                        format!("count ({}) x ({}) at n = {}", left, right, n)
                    });
                    audit.eq(&formula, &decomposition_count(right, left), || {
                        format!("asymmetry between ({}) and ({}) at n = {}", left, right, n)
                    });
                    if let Some(gt) = &spectral {
                        audit.eq(
                            &formula,
                            &gt.connection_coefficient(left, right, &class_full(n)),
                            || format!("spectral route ({}) x ({}) at n = {}", left, right, n),
                        );
                    }
                }
                audit
            })
            .collect();
        for a in per_left {
            audit.absorb(a);
        }
    }
    audit.report("cycle-decompositions", format!("n <= {}, all pairs", cap))
}

/// Criterion: the algebraic identities the derivations lean on — the
/// Jucys–Murphy product, content-polynomial sums, the binomial identity
/// behind the symmetry proof, and two-branch boundary agreement.
fn check_identities(config: &VerifyConfig) -> CheckReport {
    let mut audit = Audit::new();

    // J_2 J_3 ⋯ J_{n-1} = K_{(n-1,1),1}
    let jm_cap = config.cap(7);
    for n in 2..=jm_cap {
        let mut prod = GroupAlgebraElement::one(n);
        for k in 2..=n - 1 {
            prod = prod
                .multiply(&jm_element(n, k), config.max_brute_n)
                .expect("within guard");
        }
        let expected = Z1Element::basis(&class_n11(n))
            .expand(config.max_brute_n)
            .expect("within guard");
        audit.eq(&prod, &expected, || format!("JM product at n = {}", n));
    }

    // content evaluation: γ^{λ,i}_{(n-1,1),1} = d_{i_-(λ)}/(n-2)! times
    // the content product over the cells other than (0,0) and the
    // tagged corner
    let content_cap = config.n_max.min(7);
    for n in 2..=content_cap {
        for class in tagged_classes(n) {
            let corner = tagged_corner(class.shape(), class.tag());
            let mut product = int(1);
            for (r, &len) in class.shape().parts().iter().enumerate() {
                for c in 0..len as usize {
                    if (r, c) == (0, 0) || (r, c) == corner {
                        continue;
                    }
                    product *= int(c as i64 - r as i64);
                }
            }
            let expected = Rat::new(
                class.shape().i_minus(class.tag()).hook_dim() * product,
                factorial(n - 2),
            );
            audit.eq(&genchar_strahov(&class, &class_n11(n)), &expected, || {
                format!("content evaluation at ({})", class)
            });
        }
    }

    // weighted generalized-character sums are content-polynomial
    // coefficients
    let sum_cap = config.n_max.min(6);
    for n in 2..=sum_cap {
        let table = GammaTable::build(n);
        let classes = tagged_classes(n);
        for rho in &classes {
            let d_reduced = rho.shape().i_minus(rho.tag()).hook_dim();
            for m in 1..=n {
                let mut lhs = Rat::zero();
                for class in &classes {
                    if class.shape().num_parts() == m as usize {
                        lhs += table.gamma(rho, class)
                            * Rat::new(class.size(), d_reduced.clone());
                    }
                }
                audit.eq(&lhs, &content_poly_sum(rho.shape(), rho.tag(), m), || {
                    format!("content-polynomial sum at ({}), m = {}", rho, m)
                });
            }
        }
        // trace identity: the tags refine the ordinary character
        for shape in crate::partition::partitions_of(n) {
            for class in &classes {
                let total: Rat = shape
                    .distinct_parts()
                    .iter()
                    .map(|&i| {
                        genchar_strahov(&TaggedClass::new(shape.clone(), i), class)
                    })
                    .sum();
                audit.eq(
                    &total,
                    &Rat::from_integer(mn_character(&shape, class.shape())),
                    || format!("tag sum over {} at class ({})", shape, class),
                );
            }
        }
    }

    // hook and near-hook content polynomials in closed form
    for n in 2..=12u32 {
        for k in 0..=n - 1 {
            let mut parts = vec![n - k];
            parts.extend(std::iter::repeat(1).take(k as usize));
            let lhs = content_product_poly(&Partition::new(parts));
            let rhs = binomial_poly(i64::from(n - k) - 1, n)
                .scale(&Rat::from_integer(factorial(n)));
            audit.eq(&lhs, &rhs, || format!("hook content poly at n = {}, k = {}", n, k));
        }
        for k in 1..=n.saturating_sub(3) {
            let lhs = content_product_poly(TwoPartFamily::NearHook.shape(n, k).shape());
            let rhs = Poly::monomial(rat(1), 1)
                .mul(&binomial_poly(i64::from(n) - i64::from(k) - 2, n - 1))
                .scale(&Rat::from_integer(factorial(n - 1)));
            audit.eq(&lhs, &rhs, || {
                format!("near-hook content poly at n = {}, k = {}", n, k)
            });
        }
    }

    // the binomial identity behind the genus symmetry
    for n in 2..=12u32 {
        for k in 0..=n - 2 {
            let a = i64::from(n) - i64::from(k);
            let lhs = Poly::monomial(rat(1), 1).mul(&binomial_poly(a - 2, n - 1));
            let rhs = binomial_poly(a - 1, n)
                .scale(&rat(i64::from(n)))
                .sub(&binomial_poly(a - 2, n - 1).scale(&rat(a - 1)));
            audit.eq(&lhs, &rhs, || format!("binomial identity at n = {}, k = {}", n, k));
        }
    }

    // two-branch case tables agree on their shared boundary; evaluating
    // sweeps the internal boundary assertion, and odd/even n hit the
    // hook and near-hook overlaps respectively
    for n in 4..=12u32 {
        for p in 1..=n - 1 {
            for k in 0..=n - 2 {
                let _ = genchar_two_part(TwoPartFamily::HookRow, n, k, p);
                audit.check(true, || unreachable!());
            }
            for k in 1..=n - 1 {
                let _ = genchar_two_part(TwoPartFamily::HookCol, n, k, p);
                audit.check(true, || unreachable!());
            }
            if p >= 2 {
                for k in 1..=n - 3 {
                    let _ = genchar_two_part(TwoPartFamily::NearHook, n, k, p);
                    audit.check(true, || unreachable!());
                }
            }
        }
    }

    audit.report(
        "identity-suite",
        format!("JM n <= {}, content n <= {}, polynomial identities n <= 12", jm_cap, content_cap),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_every_suite() {
        let config = VerifyConfig { n_max: 4, max_brute_n: 6 };
        let reports = run_all(&config);
        assert_eq!(reports.len(), SUITE_NAMES.len());
        for report in &reports {
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        let config = VerifyConfig::default();
        assert!(run_suite("no-such-suite", &config).is_none());
        for name in SUITE_NAMES {
            assert_eq!(run_suite(name, &config).unwrap().name, *name);
        }
    }

    #[test]
    fn failure_reporting_shape() {
        let mut audit = Audit::new();
        audit.eq(&1, &1, || unreachable!());
        audit.eq(&1, &2, || "one is not two".to_string());
        let report = audit.report("identity-suite", "toy scope".to_string());
        assert!(!report.passed);
        assert!(report.line().starts_with("FAIL identity-suite"));
        assert!(report.details.contains("1 of 2 comparisons failed"));
        assert!(report.details.contains("one is not two"));
    }
}
