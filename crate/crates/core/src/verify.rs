//! Named property suites over generated instances.
//!
//! Every suite draws its random instances from a ChaCha stream seeded by
//! [`SuiteConfig::seed`], so equal seeds give equal instance lists. Checks are
//! keyed by property name and aggregate over all cases.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::balg::{BoolAlg, Element, Filter};
use crate::bits;
use crate::compactify::{
    extend_function, gelfand_roundtrip, idempotent_density_check, locally_constant_approx,
    sc_embed, Extension, TensorElement,
};
use crate::error::{Error, Result};
use crate::funcalg::{
    algebraic_norm, enumerate_ideals, enumerate_max_ideals, ideal_from_uf, spectrum,
    spectrum_bijection, spectrum_matches_basis, uf_from_ideal, uf_seminorm, BoundedFunction,
    IdealDescriptor, SpaceRef,
};
use crate::topo::{numbered, ContinuousMap, FiniteSpace, Partition};
use crate::ufspace::{UfMap, UfSpace};
use crate::valfield::{AbsValue, Scalar, ValuedField};

pub const SUITES: [&str; 9] = [
    "boolean-laws",
    "filters",
    "uf-universality",
    "ideal-bijection",
    "seminorm-identities",
    "orthogonality",
    "gelfand",
    "approximation",
    "tensor-isometry",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Defaults to 0.
    pub seed: u64,
    /// Caps every instance size; `None` keeps the default bounds.
    pub max_points: Option<usize>,
    /// Random cases per randomized property; `None` means 1000.
    pub cases: Option<usize>,
}

impl SuiteConfig {
    fn cap(&self, default: usize) -> usize {
        self.max_points.map_or(default, |m| m.min(default))
    }

    fn cases(&self) -> usize {
        self.cases.unwrap_or(1000)
    }

    fn validate(&self) -> Result<()> {
        if let Some(m) = self.max_points {
            if m > bits::MAX_POINTS {
                return Err(Error::Config(format!(
                    "max-points {m} exceeds the {} point limit",
                    bits::MAX_POINTS
                )));
            }
        }
        if self.cases == Some(0) && self.max_points != Some(0) {
            return Err(Error::Config("cases must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub cases: usize,
    pub failures: usize,
    #[serde(flatten)]
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub instances: Vec<String>,
    pub checks: BTreeMap<String, CheckRecord>,
    /// Wall-clock seconds per suite.
    pub timing: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.failures == 0)
    }

    pub fn failures(&self) -> Vec<(&str, &CheckRecord)> {
        self.checks
            .iter()
            .filter(|(_, c)| c.failures > 0)
            .map(|(k, c)| (k.as_str(), c))
            .collect()
    }

    pub fn total_cases(&self) -> usize {
        self.checks.values().map(|c| c.cases).sum()
    }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    config.validate()?;
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        n if SUITES.contains(&n) => vec![n],
        n => return Err(Error::UnknownSuite(n.to_string())),
    };
    let mut report = VerificationReport {
        suite: name.to_string(),
        seed: config.seed,
        instances: Vec::new(),
        checks: BTreeMap::new(),
        timing: BTreeMap::new(),
    };
    for suite in names {
        let start = Instant::now();
        let mut run = Run {
            suite,
            cfg: config,
            rng: suite_rng(config.seed, suite),
            report: &mut report,
        };
        match suite {
            "boolean-laws" => boolean_laws(&mut run),
            "filters" => filters(&mut run),
            "uf-universality" => uf_universality(&mut run),
            "ideal-bijection" => ideal_bijection(&mut run),
            "seminorm-identities" => seminorm_identities(&mut run),
            "orthogonality" => orthogonality(&mut run),
            "gelfand" => gelfand(&mut run),
            "approximation" => approximation(&mut run),
            "tensor-isometry" => tensor_isometry(&mut run),
            _ => unreachable!(),
        }
        report
            .timing
            .insert(suite.to_string(), start.elapsed().as_secs_f64());
    }
    Ok(report)
}

fn suite_rng(seed: u64, suite: &str) -> ChaCha8Rng {
    let salt = SUITES.iter().position(|s| *s == suite).unwrap_or(0) as u64;
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt))
}

struct Run<'a> {
    suite: &'a str,
    cfg: &'a SuiteConfig,
    rng: ChaCha8Rng,
    report: &'a mut VerificationReport,
}

impl Run<'_> {
    fn instance(&mut self, desc: impl AsRef<str>) {
        let line = format!("{}: {}", self.suite, desc.as_ref());
        self.report.instances.push(line);
    }

    fn check(&mut self, property: &str, ok: bool, detail: impl FnOnce() -> String) {
        let key = format!("{}/{}", self.suite, property);
        let rec = self.report.checks.entry(key).or_insert(CheckRecord {
            cases: 0,
            failures: 0,
            status: Status::Pass,
        });
        rec.cases += 1;
        if !ok {
            rec.failures += 1;
            if rec.status == Status::Pass {
                rec.status = Status::Fail { detail: detail() };
            }
        }
    }

    fn random_space(&mut self, n: usize) -> FiniteSpace {
        let x = random_space(&mut self.rng, n);
        self.instance(format!("random {}", describe_space(&x)));
        x
    }

    /// Records a fallible check; an error counts as a failure.
    fn check_result(&mut self, property: &str, res: Result<bool>, detail: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(property, ok, detail),
            Err(e) => self.check(property, false, || format!("{}: error: {e}", detail())),
        }
    }
}

// ---------------------------------------------------------------- generators

/// Every topology on n ≤ 4 labelled points, by filtering all open families.
pub fn all_topologies(n: usize) -> Vec<FiniteSpace> {
    assert!(n <= 4, "exhaustive topologies only up to 4 points");
    let full = bits::full(n);
    let middle: Vec<u64> = (1..full).collect();
    let mut out = Vec::new();
    for fam in 0u64..1 << middle.len() {
        let mut opens: Vec<u64> = bits::iter(fam).map(|i| middle[i]).collect();
        opens.push(0);
        opens.push(full);
        let closed = opens.iter().all(|&a| {
            opens
                .iter()
                .all(|&b| opens.contains(&(a | b)) && opens.contains(&(a & b)))
        });
        if closed {
            out.push(FiniteSpace::new(numbered(n), opens).expect("closed family"));
        }
    }
    out
}

/// A random topology on n points: generated by random subsets, by a random
/// partition into indiscrete blocks, or discrete.
pub fn random_space(rng: &mut impl Rng, n: usize) -> FiniteSpace {
    let full = bits::full(n);
    let labels = numbered(n);
    match rng.gen_range(0..4) {
        0 | 1 => {
            let k = rng.gen_range(0..=n + 1);
            let subbasis: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & full).collect();
            FiniteSpace::generated(labels, subbasis).expect("generated")
        }
        2 => {
            let mut blocks: Vec<u64> = Vec::new();
            for x in 0..n {
                let i = rng.gen_range(0..=blocks.len());
                if i == blocks.len() {
                    blocks.push(1 << x);
                } else {
                    blocks[i] |= 1 << x;
                }
            }
            FiniteSpace::generated(labels, blocks).expect("generated")
        }
        _ => FiniteSpace::discrete(labels).expect("small"),
    }
}

/// Values for p-adic and rational test functions.
pub fn rational_pool(p: u64) -> Vec<Scalar> {
    let p = p as i64;
    let mut out = vec![Scalar::integer(0), Scalar::integer(1), Scalar::integer(-1)];
    for (num, den) in [
        (p, 1),
        (1, p),
        (p * p, 1),
        (2 * p + 1, 1),
        (3, p),
        (p * p, 5),
    ] {
        out.push(Scalar::rational(num, den));
    }
    out
}

pub fn random_scalar(rng: &mut impl Rng, field: &ValuedField) -> Scalar {
    match field {
        ValuedField::TrivialFinite(_) => field
            .finite_elements()
            .expect("finite")
            .choose(rng)
            .expect("nonempty")
            .clone(),
        ValuedField::TrivialRational | ValuedField::PAdic { .. } => {
            if rng.gen_ratio(1, 8) {
                return Scalar::integer(0);
            }
            let num = rng.gen_range(-60i64..=60);
            let den = rng.gen_range(1i64..=36);
            Scalar::rational(num, den)
        }
        ValuedField::TrivialGaussian => {
            let re = random_scalar(rng, &ValuedField::TrivialRational);
            let im = random_scalar(rng, &ValuedField::TrivialRational);
            match (re, im) {
                (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::gaussian(a, b),
                _ => unreachable!(),
            }
        }
    }
}

/// A random function constant on components, values from `pool` if given.
pub fn random_function(
    rng: &mut impl Rng,
    space: &SpaceRef,
    field: &ValuedField,
    pool: Option<&[Scalar]>,
) -> BoundedFunction {
    let comp_values: Vec<Scalar> = (0..space.components().len())
        .map(|_| match pool {
            Some(p) => p.choose(rng).expect("nonempty pool").clone(),
            None => random_scalar(rng, field),
        })
        .collect();
    let values = (0..space.len())
        .map(|x| comp_values[space.component_of(x)].clone())
        .collect();
    BoundedFunction::new(space.clone(), field.clone(), values).expect("constant on components")
}

fn show(f: &BoundedFunction) -> String {
    let vals: Vec<String> = f
        .values()
        .iter()
        .map(|v| f.field().format_scalar(v))
        .collect();
    format!("({})", vals.join(", "))
}

fn describe_space(x: &FiniteSpace) -> String {
    let opens: Vec<String> = x.opens().iter().map(|&u| x.render(u)).collect();
    format!("|X|={} opens=[{}]", x.len(), opens.join(" "))
}

// ---------------------------------------------------------------- suites

fn boolean_laws(run: &mut Run) {
    for n in 0..=run.cfg.cap(4) {
        let alg = BoolAlg::numbered(n).expect("small");
        run.instance(format!("Boolean algebra with {n} atoms"));
        let elems: Vec<Element> = alg.elements().collect();
        for &a in &elems {
            let not_a = alg.not(a);
            run.check(
                "complement",
                alg.join(a, not_a) == alg.top() && alg.meet(a, not_a) == alg.bottom(),
                || format!("n={n} a={a}"),
            );
            run.check(
                "f2-not",
                alg.f2_add(alg.top(), a).ok() == Some(not_a),
                || format!("n={n} a={a}"),
            );
            run.check("involution", alg.not(not_a) == a, || format!("n={n} a={a}"));
            for &b in &elems {
                let (j, m) = (alg.join(a, b), alg.meet(a, b));
                run.check(
                    "commutative",
                    j == alg.join(b, a) && m == alg.meet(b, a),
                    || format!("n={n} a={a} b={b}"),
                );
                run.check(
                    "absorption",
                    alg.join(a, m) == a && alg.meet(a, j) == a,
                    || format!("n={n} a={a} b={b}"),
                );
                run.check(
                    "de-morgan",
                    alg.not(j) == alg.meet(alg.not(a), alg.not(b)),
                    || format!("n={n} a={a} b={b}"),
                );
                let via_ring = alg
                    .f2_add(a, b)
                    .and_then(|s| alg.f2_mul(a, b).and_then(|p| alg.f2_add(s, p)));
                run.check("f2-join", via_ring.ok() == Some(j), || {
                    format!("n={n} a={a} b={b}")
                });
                run.check("f2-meet", alg.f2_mul(a, b).ok() == Some(m), || {
                    format!("n={n} a={a} b={b}")
                });
                run.check("order", alg.leq(a, b) == (m == a), || {
                    format!("n={n} a={a} b={b}")
                });
                for &c in &elems {
                    let ok = alg.join(a, alg.join(b, c)) == alg.join(j, c)
                        && alg.meet(a, alg.meet(b, c)) == alg.meet(m, c);
                    run.check("associative", ok, || format!("n={n} a={a} b={b} c={c}"));
                    let ok = alg.meet(a, alg.join(b, c)) == alg.join(m, alg.meet(a, c))
                        && alg.join(a, alg.meet(b, c)) == alg.meet(j, alg.join(a, c));
                    run.check("distributive", ok, || format!("n={n} a={a} b={b} c={c}"));
                }
            }
        }
    }
    // CO(X) with set operations is the algebra on its components
    for n in 0..=run.cfg.cap(3) {
        for x in all_topologies(n) {
            let co = x.clopens();
            let alg = co.algebra().clone();
            let mut carrier = co.carrier();
            carrier.sort_unstable();
            run.check("clopen-carrier", carrier == x.clopen_sets(), || {
                describe_space(&x)
            });
            for a in alg.elements() {
                let (ua, na) = (co.to_points(a), co.to_points(alg.not(a)));
                run.check("clopen-complement", na == x.full() & !ua, || {
                    describe_space(&x)
                });
                for b in alg.elements() {
                    let ub = co.to_points(b);
                    let ok = co.to_points(alg.join(a, b)) == ua | ub
                        && co.to_points(alg.meet(a, b)) == ua & ub;
                    run.check("clopen-operations", ok, || describe_space(&x));
                }
            }
        }
    }
}

/// Families of elements of the n-atom algebra (bit e = element e) that are filters.
pub fn brute_force_filters(n: usize) -> Vec<u64> {
    assert!(n <= 4);
    let size = 1usize << n;
    let top = size - 1;
    (0u64..1 << size)
        .filter(|&fam| {
            bits::contains(fam, top)
                && bits::iter(fam).all(|a| {
                    (0..size).all(|b| b & a != a || bits::contains(fam, b))
                        && bits::iter(fam).all(|b| bits::contains(fam, a & b))
                })
        })
        .collect()
}

fn family_of(f: &Filter) -> u64 {
    f.members().iter().fold(0u64, |m, e| m | 1 << e.0)
}

fn filters(run: &mut Run) {
    // Fil_S is the least filter containing S; proper iff ⋀S ≠ ⊥
    for n in 0..=run.cfg.cap(3) {
        let alg = BoolAlg::numbered(n).expect("small");
        let all = brute_force_filters(n);
        run.instance(format!("Fil_S over {n} atoms, {} filters", all.len()));
        let size = 1usize << n;
        for s in 0u64..1 << size {
            let gens: Vec<Element> = bits::iter(s).map(|e| Element(e as u64)).collect();
            let least = all
                .iter()
                .filter(|&&fam| s & !fam == 0)
                .fold(bits::full(size), |m, &fam| m & fam);
            match Filter::generated(&alg, &gens) {
                Ok(fil) => {
                    run.check("fil-s-least", family_of(&fil) == least, || {
                        format!("n={n} S={s:#b} got={:#b} want={least:#b}", family_of(&fil))
                    });
                    let wedge = gens.iter().fold(alg.top(), |m, &g| alg.meet(m, g));
                    run.check(
                        "fil-s-properness",
                        fil.is_proper() == (wedge != alg.bottom()),
                        || format!("n={n} S={s:#b}"),
                    );
                }
                Err(e) => run.check("fil-s-least", false, || format!("n={n} S={s:#b}: {e}")),
            }
        }
    }
    // ultrafilter axioms ⟺ maximal proper filter
    for n in 0..=run.cfg.cap(4) {
        let alg = BoolAlg::numbered(n).expect("small");
        let size = 1usize << n;
        let all = brute_force_filters(n);
        let proper: Vec<u64> = all
            .iter()
            .copied()
            .filter(|&f| !bits::contains(f, 0))
            .collect();
        let maximal: Vec<u64> = proper
            .iter()
            .copied()
            .filter(|&f| !proper.iter().any(|&g| g != f && f & !g == 0))
            .collect();
        run.instance(format!(
            "ultrafilters over {n} atoms, {} filters",
            all.len()
        ));
        for &fam in &all {
            let members = bits::iter(fam).map(|e| Element(e as u64));
            match Filter::from_members(&alg, members) {
                Ok(f) => {
                    run.check(
                        "ultra-iff-maximal",
                        f.is_ultrafilter() == maximal.contains(&fam),
                        || format!("n={n} F={fam:#b}"),
                    );
                    match f.extend_to_ultrafilter() {
                        Ok(u) => {
                            let uf = family_of(u.filter());
                            run.check(
                                "extension",
                                f.is_proper() && fam & !uf == 0 && maximal.contains(&uf),
                                || format!("n={n} F={fam:#b} U={uf:#b}"),
                            );
                        }
                        Err(_) => {
                            run.check("extension", !f.is_proper(), || format!("n={n} F={fam:#b}"))
                        }
                    }
                }
                Err(e) => run.check("ultra-iff-maximal", false, || {
                    format!("n={n} F={fam:#b}: {e}")
                }),
            }
        }
        if n <= 3 {
            for fam in 0u64..1 << size {
                let accepted =
                    Filter::from_members(&alg, bits::iter(fam).map(|e| Element(e as u64))).is_ok();
                run.check("filter-validation", accepted == all.contains(&fam), || {
                    format!("n={n} family={fam:#b}")
                });
            }
        }
        let ufs = alg.enumerate_ultrafilters();
        let listed: Vec<u64> = ufs.iter().map(|u| family_of(u.filter())).collect();
        run.check(
            "ultrafilter-count",
            maximal.len() == n && ufs.len() == n,
            || format!("n={n} maximal={} enumerated={}", maximal.len(), ufs.len()),
        );
        run.check(
            "ultrafilter-enumeration",
            listed.iter().all(|u| maximal.contains(u)),
            || format!("n={n}"),
        );
    }
}

fn universality_spaces(run: &mut Run) -> Vec<FiniteSpace> {
    let mut spaces = Vec::new();
    for n in 0..=run.cfg.cap(4) {
        spaces.extend(all_topologies(n));
    }
    for n in 5..=run.cfg.cap(6) {
        for _ in 0..150 {
            spaces.push(run.random_space(n));
        }
    }
    spaces
}

fn uf_universality(run: &mut Run) {
    let spaces = universality_spaces(run);
    run.instance(format!(
        "{} spaces (all topologies on ≤ 4 points, sampled above)",
        spaces.len()
    ));
    for x in &spaces {
        let uf = UfSpace::build(x);
        let d = || describe_space(x);
        run.check(
            "size-equals-components",
            uf.len() == x.components().len(),
            d,
        );
        run.check("principal-dense", uf.principal_image_dense(), d);
        for f in uf.ultrafilters() {
            let cluster = uf.cluster_points(f);
            let by_nbhd = uf.cluster_points_by_neighbourhoods(f);
            run.check(
                "cluster-definitions-agree",
                cluster.is_ok() && cluster == by_nbhd,
                d,
            );
            if let Ok(c) = cluster {
                if let Some(p) = bits::lowest(c) {
                    run.check(
                        "cluster-implies-principal",
                        uf.principal(p).ok().as_ref() == Some(f),
                        d,
                    );
                }
            }
        }
        let report = uf.criterion_report();
        let verdict = report.td_compact_hausdorff.unwrap_or(false);
        run.check(
            "criterion-matches-discrete",
            verdict == x.is_discrete(),
            || format!("{} verdict={verdict}", d()),
        );
        run.check("idempotent", uf.check_idempotent(), d);
    }

    // factorization through the principal map and its uniqueness
    for nx in 0..=run.cfg.cap(4) {
        for ny in 0..=run.cfg.cap(3) {
            let x = FiniteSpace::discrete_numbered(nx).expect("small");
            let y = FiniteSpace::discrete_numbered(ny).expect("small");
            factorizations(run, &x, &y);
        }
    }
    for nx in 0..=run.cfg.cap(3) {
        for ny in 1..=run.cfg.cap(2) {
            let y = FiniteSpace::discrete_numbered(ny).expect("small");
            for x in all_topologies(nx) {
                factorizations(run, &x, &y);
            }
        }
    }
    if run.cfg.cap(2) == 2 {
        let x = FiniteSpace::discrete_numbered(2).expect("small");
        let f = ContinuousMap::new(x.clone(), FiniteSpace::sierpinski(), vec![0, 1]).expect("map");
        run.check(
            "non-hausdorff-target-rejected",
            matches!(UfMap::new(&f), Err(Error::TargetNotHausdorff)),
            || "discrete 2 → Sierpiński".into(),
        );
    }
}

/// Every continuous f: X → Y factors as UF(f) ∘ principal, through exactly one map.
fn factorizations(run: &mut Run, x: &FiniteSpace, y: &FiniteSpace) {
    run.instance(format!("maps {} → discrete {}", describe_space(x), y.len()));
    let (nx, ny) = (x.len(), y.len());
    let total = (ny as u64).pow(nx as u32);
    for code in 0..total {
        let assignment = digits(code, ny, nx);
        let f = ContinuousMap::new(x.clone(), y.clone(), assignment.clone()).expect("in range");
        if !f.is_continuous() {
            continue;
        }
        let Ok(uf_f) = UfMap::new(&f) else {
            run.check("uf-map", false, || format!("f={assignment:?}"));
            continue;
        };
        let uf = uf_f.uf();
        let p = uf.principal_map();
        let factors = (0..nx).all(|pt| uf_f.images()[p.apply(pt)] == f.apply(pt));
        run.check("factorization", factors, || {
            format!("X={} f={assignment:?}", describe_space(x))
        });
        let realized = uf.to_space();
        let candidates = (ny as u64).pow(uf.len() as u32);
        let mut matching = Vec::new();
        for g_code in 0..candidates {
            let g = digits(g_code, ny, uf.len());
            let gm = ContinuousMap::new(realized.clone(), y.clone(), g.clone()).expect("in range");
            if gm.is_continuous() && (0..nx).all(|pt| g[p.apply(pt)] == f.apply(pt)) {
                matching.push(g);
            }
        }
        run.check(
            "factorization-unique",
            matching.len() == 1 && matching[0] == uf_f.images(),
            || {
                format!(
                    "X={} f={assignment:?} candidates={matching:?}",
                    describe_space(x)
                )
            },
        );
    }
}

fn digits(mut code: u64, base: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = (code % base as u64) as usize;
            code /= base as u64;
            d
        })
        .collect()
}

fn standard_fields() -> Vec<ValuedField> {
    vec![
        ValuedField::finite(2).expect("F2"),
        ValuedField::p_adic(2).expect("Q2"),
        ValuedField::p_adic(3).expect("Q3"),
    ]
}

fn ideal_bijection(run: &mut Run) {
    let mut spaces: Vec<FiniteSpace> = (0..=run.cfg.cap(8))
        .map(|n| FiniteSpace::discrete_numbered(n).expect("small"))
        .collect();
    for n in 1..=run.cfg.cap(8) {
        for _ in 0..10 {
            spaces.push(run.random_space(n));
        }
    }
    run.instance(format!(
        "{} spaces up to {} points over F2, Q2, Q3",
        spaces.len(),
        run.cfg.cap(8)
    ));
    for x in spaces {
        let space: SpaceRef = Arc::new(x);
        let uf = UfSpace::build(&space);
        let d = || describe_space(&space);
        for k in standard_fields() {
            let maxes = enumerate_max_ideals(&space, &k);
            run.check("max-ideal-count", maxes.len() == uf.len(), d);
            for (c, m) in maxes.iter().enumerate() {
                let point = bits::lowest(space.components()[c]).expect("nonempty component");
                let f_m = uf_from_ideal(m);
                let principal = uf.principal(point);
                run.check(
                    "ideal-to-principal",
                    f_m.is_ok() && f_m.as_ref().ok() == principal.as_ref().ok(),
                    d,
                );
                if let Ok(f_m) = f_m {
                    let back = ideal_from_uf(&space, &k, &f_m);
                    run.check(
                        "ideal-roundtrip",
                        back.map(|b| b.zero_set()) == Ok(m.zero_set()),
                        d,
                    );
                }
            }
            for f in uf.ultrafilters() {
                let back = ideal_from_uf(&space, &k, f).and_then(|m| uf_from_ideal(&m));
                run.check("ultrafilter-roundtrip", back.as_ref().ok() == Some(f), d);
            }
        }
        // prime ⟺ maximal ⟺ zero set is one component, against the
        // idempotent definition of primality
        if space.components().len() <= 6 {
            let k = ValuedField::finite(2).expect("F2");
            let clopens = space.clopen_sets();
            for ideal in enumerate_ideals(&space, &k) {
                let z = ideal.zero_set_points();
                let holds = |w: u64| w & z == 0;
                let proper = z != 0;
                let prime = proper
                    && clopens.iter().all(|&u| {
                        clopens
                            .iter()
                            .all(|&v| !holds(u & v) || holds(u) || holds(v))
                    });
                run.check(
                    "prime-iff-maximal",
                    ideal.is_prime() == prime && ideal.is_maximal() == prime,
                    || format!("{} zero set {}", d(), space.render(z)),
                );
            }
        }
    }
    // spectra over different base fields induce the same bijection onto UF(X)
    for n in 0..=run.cfg.cap(6) {
        let mut spaces = vec![FiniteSpace::discrete_numbered(n).expect("small")];
        for _ in 0..8 {
            spaces.push(run.random_space(n));
        }
        for x in spaces {
            let space: SpaceRef = Arc::new(x);
            let uf = UfSpace::build(&space);
            let mut bijections = Vec::new();
            for k in standard_fields() {
                let points = spectrum(&space, &k);
                let b = spectrum_bijection(&points, &uf);
                if let Some(b) = &b {
                    let basis = spectrum_matches_basis(&points, &uf, b);
                    run.check("spectrum-topology", basis == Ok(true), || {
                        describe_space(&space)
                    });
                }
                bijections.push(b);
            }
            let same = bijections[0].is_some() && bijections.iter().all(|b| *b == bijections[0]);
            run.check("base-field-independence", same, || {
                format!("{} bijections={bijections:?}", describe_space(&space))
            });
        }
    }
}

fn seminorm_fields() -> Vec<ValuedField> {
    vec![
        ValuedField::finite(2).expect("F2"),
        ValuedField::finite(4).expect("F4"),
        ValuedField::p_adic(2).expect("Q2"),
        ValuedField::p_adic(3).expect("Q3"),
    ]
}

fn pool_for(field: &ValuedField) -> Vec<Scalar> {
    match field {
        ValuedField::PAdic { p } => rational_pool(*p),
        _ => field.finite_elements().unwrap_or_else(|| rational_pool(2)),
    }
}

/// inf over g ∈ m of ‖f + g‖, with g ranging over `grid` off the zero set.
pub fn brute_force_quotient_norm(
    f: &BoundedFunction,
    m: &IdealDescriptor,
    grid: &[Scalar],
) -> AbsValue {
    let space = f.space();
    let k = f.field();
    let free: Vec<usize> = (0..space.components().len())
        .filter(|&c| !bits::contains(m.zero_set(), c))
        .collect();
    let combos = grid.len().pow(free.len() as u32);
    let mut best: Option<AbsValue> = None;
    for code in 0..combos {
        let choice = digits(code as u64, grid.len(), free.len());
        let norm = (0..space.len())
            .map(|x| {
                let c = space.component_of(x);
                match free.iter().position(|&fc| fc == c) {
                    Some(i) => k.abs(&k.add(f.value(x), &grid[choice[i]])),
                    None => k.abs(f.value(x)),
                }
            })
            .max()
            .unwrap_or(AbsValue::Zero);
        best = Some(best.map_or(norm, |b| b.min(norm)));
    }
    best.unwrap_or_else(|| f.sup_norm())
}

fn seminorm_spaces(run: &mut Run) -> Vec<SpaceRef> {
    let mut spaces: Vec<FiniteSpace> = (1..=run.cfg.cap(4))
        .map(|n| FiniteSpace::discrete_numbered(n).expect("small"))
        .collect();
    for n in [3, 4, 6] {
        if n <= run.cfg.cap(6) {
            spaces.push(run.random_space(n));
        }
    }
    spaces.into_iter().map(Arc::new).collect()
}

fn seminorm_identities(run: &mut Run) {
    let spaces = seminorm_spaces(run);
    let cases = run.cfg.cases();
    for k in seminorm_fields() {
        let pool = pool_for(&k);
        let grid: Vec<Scalar> = {
            let mut g: Vec<Scalar> = pool.iter().flat_map(|v| [v.clone(), k.neg(v)]).collect();
            g.dedup();
            g
        };
        for space in &spaces {
            run.instance(format!(
                "{cases} function pairs over {k} on {}",
                describe_space(space)
            ));
            let uf = UfSpace::build(space);
            let maxes = enumerate_max_ideals(space, &k);
            let points = spectrum(space, &k);
            let oracle_cases = if k.is_trivially_valued() { cases } else { 25 };
            for case in 0..cases {
                let f = random_function(&mut run.rng, space, &k, Some(&pool));
                let g = random_function(&mut run.rng, space, &k, None);
                let fg = f.mul(&g).expect("same space");
                let d = || format!("{k} f={} g={}", show(&f), show(&g));
                run.check(
                    "sup-equals-algebraic",
                    f.sup_norm() == algebraic_norm(&f),
                    d,
                );
                for (c, m) in maxes.iter().enumerate() {
                    let point = bits::lowest(space.components()[c]).expect("nonempty");
                    let u = uf.principal(point).expect("point");
                    let (Ok(nf), Ok(ng), Ok(nfg)) = (
                        uf_seminorm(&f, &u),
                        uf_seminorm(&g, &u),
                        uf_seminorm(&fg, &u),
                    ) else {
                        run.check("seminorm-defined", false, d);
                        continue;
                    };
                    run.check("quotient-equals-seminorm", m.quotient_norm(&f) == Ok(nf), d);
                    run.check("multiplicative", nfg == nf * ng, d);
                    run.check("bounded-by-sup", nf <= f.sup_norm(), d);
                    if space.len() <= 4 && case < oracle_cases {
                        let brute = brute_force_quotient_norm(&f, m, &grid);
                        run.check("quotient-brute-force", brute == nf, || {
                            format!("{} brute={brute} seminorm={nf}", d())
                        });
                    }
                }
                for x in &points {
                    let ok = x.check_axioms(&f, &g).map(|a| a.all());
                    run.check_result("berkovich-axioms", ok, d);
                }
            }
        }
    }
}

fn orthogonality(run: &mut Run) {
    let spaces = seminorm_spaces(run);
    if spaces.is_empty() {
        return;
    }
    let cases = run.cfg.cases();
    for k in seminorm_fields() {
        run.instance(format!("{cases} triples (a, g, m) over {k}"));
        for _ in 0..cases {
            let space = spaces.choose(&mut run.rng).expect("nonempty").clone();
            let c = run.rng.gen_range(0..space.components().len());
            let m = IdealDescriptor::maximal_at(space.clone(), k.clone(), c).expect("component");
            let raw = random_function(&mut run.rng, &space, &k, None);
            let values = (0..space.len())
                .map(|x| {
                    if space.component_of(x) == c {
                        k.zero()
                    } else {
                        raw.value(x).clone()
                    }
                })
                .collect();
            let g = BoundedFunction::new(space.clone(), k.clone(), values)
                .expect("constant on components");
            let a = random_scalar(&mut run.rng, &k);
            let d = || {
                format!(
                    "{k} a={} g={} m at component {c}",
                    k.format_scalar(&a),
                    show(&g)
                )
            };
            run.check_result(
                "orthogonal-decomposition",
                m.orthogonal_decomposition_check(&a, &g),
                d,
            );
            // pointwise recomputation of ‖a + g‖
            let lhs = (0..space.len())
                .map(|x| k.abs(&k.add(&a, g.value(x))))
                .max()
                .unwrap_or(AbsValue::Zero);
            run.check(
                "orthogonal-pointwise",
                lhs == k.abs(&a).max(g.sup_norm()),
                d,
            );
            if !raw.vanishes_on(space.components()[c]) {
                run.check(
                    "non-member-rejected",
                    matches!(
                        m.orthogonal_decomposition_check(&a, &raw),
                        Err(Error::NotInIdeal)
                    ),
                    d,
                );
            }
        }
    }
}

fn gelfand(run: &mut Run) {
    let k = ValuedField::p_adic(2).expect("Q2");
    for n in 0..=run.cfg.cap(6) {
        let space: SpaceRef = Arc::new(FiniteSpace::discrete_numbered(n).expect("small"));
        let parts = Partition::all(n);
        run.instance(format!("{} partitions of discrete {n}", parts.len()));
        for p in parts {
            run.check_result(
                "gelfand-roundtrip",
                gelfand_roundtrip(&space, &k, &p),
                || p.render(&space),
            );
        }
    }
    let mut spaces = Vec::new();
    for n in 0..=run.cfg.cap(4) {
        spaces.extend(all_topologies(n));
    }
    for n in 5..=run.cfg.cap(8) {
        for _ in 0..40 {
            spaces.push(run.random_space(n));
        }
    }
    run.instance(format!(
        "{} spaces for the evaluation embedding",
        spaces.len()
    ));
    for x in spaces {
        let space: SpaceRef = Arc::new(x);
        let d = || describe_space(&space);
        let emb = sc_embed(&space, &k);
        run.check(
            "embedding-iff-discrete",
            emb.verdict.homeomorphism == space.is_discrete(),
            d,
        );
        run.check(
            "embedding-coordinates-integral",
            emb.verdict.integral_coordinates,
            d,
        );
        let f = random_function(&mut run.rng, &space, &k, None);
        match extend_function(&f) {
            Ok(ext) => {
                run.check(
                    "extension-restricts",
                    ext.restrict_to_base().ok().as_ref() == Some(&f),
                    d,
                );
                run.check("extension-norm", ext.sup_norm() == f.sup_norm(), d);
                // the principal image is all of UF(X), so agreement there pins the extension
                let p = ext.uf.principal_map();
                run.check("extension-unique", p.is_surjective(), d);
            }
            Err(e) => run.check("extension-restricts", false, || format!("{}: {e}", d())),
        }
        let w = idempotent_density_check(&f).map(|w| w.exact);
        run.check_result("idempotent-density", w, d);
    }
}

fn approximation(run: &mut Run) {
    let fields = [
        ValuedField::p_adic(2).expect("Q2"),
        ValuedField::p_adic(3).expect("Q3"),
        ValuedField::TrivialRational,
    ];
    let cap = run.cfg.cap(6);
    if cap >= 1 {
        let cases = run.cfg.cases();
        run.instance(format!(
            "{cases} random (f, ε) on discrete spaces up to {cap} points"
        ));
        for _ in 0..cases {
            let k = fields.choose(&mut run.rng).expect("nonempty").clone();
            let n = run.rng.gen_range(1..=cap);
            let space: SpaceRef = Arc::new(FiniteSpace::discrete_numbered(n).expect("small"));
            let f = random_function(&mut run.rng, &space, &k, None);
            let base = match k {
                ValuedField::PAdic { p } => p,
                _ => 2,
            };
            let eps = if k.is_trivially_valued() || run.rng.gen_ratio(1, 5) {
                AbsValue::One
            } else {
                AbsValue::pow(base, run.rng.gen_range(-3..=2))
            };
            let d = || format!("{k} f={} ε={eps}", show(&f));
            match locally_constant_approx(&f, eps) {
                Ok(a) => {
                    let diff = f.sub(&a.g).expect("same space").sup_norm();
                    run.check("within-epsilon", diff <= eps, || {
                        format!("{} ‖f−g‖={diff}", d())
                    });
                    run.check("norm-not-increased", a.g.sup_norm() <= f.sup_norm(), d);
                    let constant = a.blocks.blocks().iter().all(|&b| {
                        let r = bits::lowest(b).expect("nonempty block");
                        bits::iter(b).all(|x| a.g.value(x) == a.g.value(r))
                    });
                    run.check("constant-on-blocks", constant, d);
                }
                Err(e) => run.check("within-epsilon", false, || format!("{}: {e}", d())),
            }
        }
    }
    if cap >= 4 {
        let k = ValuedField::p_adic(2).expect("Q2");
        let space: SpaceRef = Arc::new(FiniteSpace::discrete_numbered(4).expect("small"));
        let f = BoundedFunction::new(
            space.clone(),
            k.clone(),
            [1, 3, 4, 12].map(Scalar::integer).to_vec(),
        )
        .expect("discrete");
        run.instance("worked example f=(1,3,4,12) over Q2, ε=1");
        let ok = locally_constant_approx(&f, AbsValue::One).is_ok_and(|a| {
            a.blocks == Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).expect("partition")
                && a.g.values() == [1, 1, 4, 4].map(Scalar::integer).as_slice()
                && f.sub(&a.g).expect("same space").sup_norm() == AbsValue::pow(2, -1)
        });
        run.check("worked-example", ok, || "f=(1,3,4,12), ε=1".into());
    }
}

fn tensor_isometry(run: &mut Run) {
    let cap = run.cfg.cap(4);
    if cap == 0 {
        return;
    }
    let cases = run.cfg.cases();
    for ext in [Extension::F4OverF2, Extension::GaussianOverQ] {
        let (k, big) = (ext.base_field(), ext.ext_field());
        run.instance(format!("{cases} tensors with ≤ 4 summands for {ext:?}"));
        for _ in 0..cases {
            let n = run.rng.gen_range(1..=cap);
            let space: SpaceRef = Arc::new(if run.rng.gen_bool(0.5) {
                FiniteSpace::discrete_numbered(n).expect("small")
            } else {
                run.random_space(n)
            });
            let summands = run.rng.gen_range(0..=4);
            let terms: Vec<(Scalar, BoundedFunction)> = (0..summands)
                .map(|_| {
                    let c = random_scalar(&mut run.rng, &big);
                    (c, random_function(&mut run.rng, &space, &k, None))
                })
                .collect();
            let t = match TensorElement::new(ext, space.clone(), terms) {
                Ok(t) => t,
                Err(e) => {
                    run.check("isometry", false, || format!("{ext:?}: {e}"));
                    continue;
                }
            };
            let d = || {
                let body: Vec<String> = t
                    .terms
                    .iter()
                    .map(|(c, g)| format!("{}⊗{}", big.format_scalar(c), show(g)))
                    .collect();
                format!("{ext:?} t={}", body.join(" + "))
            };
            run.check_result("isometry", t.isometry_check(), d);
            match t.apply_extension() {
                Ok(image) => run.check("naive-bound", image.sup_norm() <= t.naive_bound(), d),
                Err(e) => run.check("naive-bound", false, || format!("{}: {e}", d())),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_topologies(n).len()).collect();
        assert_eq!(counts, [1, 1, 4, 29, 355]);
    }

    #[test]
    fn filter_counts() {
        // every filter of a finite algebra is principal, plus none extra
        let counts: Vec<usize> = (0..=3).map(|n| brute_force_filters(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 8]);
    }

    #[test]
    fn suite_names() {
        assert!(matches!(
            run_suite("bogus", &SuiteConfig::default()),
            Err(Error::UnknownSuite(_))
        ));
        let cfg = SuiteConfig {
            max_points: Some(0),
            ..Default::default()
        };
        assert!(run_suite("all", &cfg).unwrap().passed());
    }

    #[test]
    fn seeded_instances_repeat() {
        let cfg = SuiteConfig {
            seed: 7,
            max_points: Some(5),
            cases: Some(20),
        };
        let a = run_suite("uf-universality", &cfg).unwrap();
        let b = run_suite("uf-universality", &cfg).unwrap();
        assert_eq!(a.instances, b.instances);
        assert_eq!(a.checks, b.checks);
    }
}
