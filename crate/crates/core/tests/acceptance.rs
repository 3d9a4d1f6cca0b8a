//! Acceptance criteria 1–12, each against an oracle written here from first
//! principles (bitmask set algebra, brute-force enumeration, hand-rolled
//! p-adic magnitudes and F4 / Q(i) arithmetic), with its runtime bound.
//!
//! Runs as a plain binary: `cargo test --test acceptance [-- N ...]`.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ultranorm::balg::{BoolAlg, Element, Filter};
use ultranorm::compactify::{
    gelfand_roundtrip, locally_constant_approx, Extension, SubalgebraDescriptor, TensorElement,
};
use ultranorm::funcalg::{
    algebraic_norm, ideal_from_uf, spectrum, spectrum_bijection, uf_from_ideal, uf_seminorm,
    BoundedFunction, IdealDescriptor, SpaceRef,
};
use ultranorm::topo::{ContinuousMap, FiniteSpace, Partition};
use ultranorm::ufspace::{pushforward, UfMap};
use ultranorm::{AbsValue, Scalar, UfSpace, ValuedField};

type Failures = Vec<String>;

struct Criterion {
    id: u32,
    bound_secs: f64,
    summary: &'static str,
    body: fn(&mut Failures),
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: 1,
        bound_secs: 1.0,
        summary: "Boolean laws and F2 round trip, ≤ 4 atoms",
        body: c1,
    },
    Criterion {
        id: 2,
        bound_secs: 5.0,
        summary: "Fil_S least filter and wedge properness, ≤ 3 atoms",
        body: c2,
    },
    Criterion {
        id: 3,
        bound_secs: 5.0,
        summary: "ultrafilter axioms ⟺ maximal proper, ≤ 4 atoms",
        body: c3,
    },
    Criterion {
        id: 4,
        bound_secs: 60.0,
        summary: "UF(X) structure for spaces ≤ 6 points",
        body: c4,
    },
    Criterion {
        id: 5,
        bound_secs: 30.0,
        summary: "UF(f) factorization and uniqueness",
        body: c5,
    },
    Criterion {
        id: 6,
        bound_secs: 10.0,
        summary: "maximal ideal ↔ ultrafilter round trips, |X| ≤ 8",
        body: c6,
    },
    Criterion {
        id: 7,
        bound_secs: 60.0,
        summary: "seminorm identities, ≥ 10³ functions per field/space",
        body: c7,
    },
    Criterion {
        id: 8,
        bound_secs: 5.0,
        summary: "orthogonal decomposition, ≥ 10³ cases",
        body: c8,
    },
    Criterion {
        id: 9,
        bound_secs: 10.0,
        summary: "base-field independence of the spectrum",
        body: c9,
    },
    Criterion {
        id: 10,
        bound_secs: 10.0,
        summary: "Gel'fand partition round trips, |X| ≤ 6",
        body: c10,
    },
    Criterion {
        id: 11,
        bound_secs: 10.0,
        summary: "locally constant approximation, ≥ 10³ cases",
        body: c11,
    },
    Criterion {
        id: 12,
        bound_secs: 10.0,
        summary: "tensor isometry over F4/F2 and Q(i)/Q",
        body: c12,
    },
];

fn main() {
    let wanted: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut all_ok = true;
    for c in CRITERIA
        .iter()
        .filter(|c| wanted.is_empty() || wanted.contains(&c.id))
    {
        let start = Instant::now();
        let mut failures = Vec::new();
        (c.body)(&mut failures);
        let secs = start.elapsed().as_secs_f64();
        let in_time = secs < c.bound_secs;
        let ok = failures.is_empty() && in_time;
        all_ok &= ok;
        println!(
            "criterion {:>2}: {} ({secs:.2}s, bound {}s) {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.bound_secs,
            c.summary
        );
        if !in_time {
            println!("    runtime bound exceeded");
        }
        for f in failures.iter().take(5) {
            println!("    {f}");
        }
        if failures.len() > 5 {
            println!("    ... {} failures in total", failures.len());
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}

macro_rules! expect {
    ($fails:expr, $cond:expr, $($msg:tt)+) => {
        if !$cond {
            $fails.push(format!($($msg)+));
        }
    };
}

// ------------------------------------------------------------------ oracles

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// All open families on n points, straight from the axioms.
fn oracle_topologies(n: usize) -> Vec<Vec<u64>> {
    let subsets: Vec<u64> = (0..=full(n)).collect();
    let mut out = Vec::new();
    for fam in 0u64..1 << subsets.len() {
        let opens: Vec<u64> = members(fam).map(|i| subsets[i]).collect();
        let has = |s: u64| opens.contains(&s);
        if has(0)
            && has(full(n))
            && opens
                .iter()
                .all(|&a| opens.iter().all(|&b| has(a | b) && has(a & b)))
        {
            out.push(opens);
        }
    }
    out
}

/// Closes a family under pairwise ∪ and ∩ by iterating to a fixed point.
fn oracle_close(n: usize, subbasis: &[u64]) -> Vec<u64> {
    let mut opens: BTreeSet<u64> = subbasis.iter().map(|s| s & full(n)).collect();
    opens.insert(0);
    opens.insert(full(n));
    loop {
        let cur: Vec<u64> = opens.iter().copied().collect();
        let before = opens.len();
        for &a in &cur {
            for &b in &cur {
                opens.insert(a | b);
                opens.insert(a & b);
            }
        }
        if opens.len() == before {
            return opens.into_iter().collect();
        }
    }
}

fn random_opens(rng: &mut ChaCha8Rng, n: usize) -> Vec<u64> {
    let k = rng.gen_range(0..=n + 2);
    let sub: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & full(n)).collect();
    oracle_close(n, &sub)
}

fn clopens_of(n: usize, opens: &[u64]) -> Vec<u64> {
    opens
        .iter()
        .copied()
        .filter(|&u| opens.contains(&(full(n) & !u)))
        .collect()
}

/// Connected components as classes of the specialization graph
/// (x — y when x lies in the closure of {y} or vice versa).
fn oracle_components(n: usize, opens: &[u64]) -> Vec<u64> {
    let in_closure = |x: usize, y: usize| opens.iter().all(|&u| u >> x & 1 == 0 || u >> y & 1 == 1);
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        let mut mask = 0u64;
        comp[start] = id;
        while let Some(x) = stack.pop() {
            mask |= 1 << x;
            for (y, slot) in comp.iter_mut().enumerate() {
                if *slot == usize::MAX && (in_closure(x, y) || in_closure(y, x)) {
                    *slot = id;
                    stack.push(y);
                }
            }
        }
        out.push(mask);
    }
    out
}

fn space(n: usize, opens: &[u64]) -> SpaceRef {
    Arc::new(FiniteSpace::new(labels(n), opens.iter().copied()).expect("valid topology"))
}

fn discrete(n: usize) -> SpaceRef {
    Arc::new(FiniteSpace::discrete(labels(n)).expect("small"))
}

fn point_sets(x: &FiniteSpace, f: &Filter) -> BTreeSet<u64> {
    let co = x.clopens();
    f.members().iter().map(|&e| co.to_points(e)).collect()
}

/// {U clopen : x ∈ U}.
fn oracle_principal(n: usize, opens: &[u64], x: usize) -> BTreeSet<u64> {
    clopens_of(n, opens)
        .into_iter()
        .filter(|u| u >> x & 1 == 1)
        .collect()
}

fn v_p(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// |r|_p = p^{-v_p(r)} as an exact rational; 0 for 0.
fn padic_mag(r: &BigRational, p: u64) -> BigRational {
    if r.is_zero() {
        return BigRational::zero();
    }
    let v = v_p(r.numer(), p) - v_p(r.denom(), p);
    let pp = BigRational::from_integer(BigInt::from(p).pow(v.unsigned_abs() as u32));
    if v >= 0 {
        pp.recip()
    } else {
        pp
    }
}

fn rational(s: &Scalar) -> &BigRational {
    match s {
        Scalar::Rational(r) => r,
        other => panic!("expected a rational scalar, got {other:?}"),
    }
}

fn is_zero_scalar(s: &Scalar) -> bool {
    match s {
        Scalar::Finite(v) => v.iter().all(|&c| c == 0),
        Scalar::Rational(r) => r.is_zero(),
        Scalar::Gaussian(a, b) => a.is_zero() && b.is_zero(),
    }
}

/// Oracle magnitude of a scalar in `k`.
fn mag(k: &ValuedField, s: &Scalar) -> BigRational {
    match k {
        ValuedField::PAdic { p } => padic_mag(rational(s), *p),
        _ if is_zero_scalar(s) => BigRational::zero(),
        _ => BigRational::one(),
    }
}

fn sup_mag(k: &ValuedField, vals: &[Scalar]) -> BigRational {
    vals.iter()
        .map(|v| mag(k, v))
        .max()
        .unwrap_or_else(BigRational::zero)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pool(p: u64) -> Vec<BigRational> {
    let p = p as i64;
    vec![
        q(0, 1),
        q(1, 1),
        q(-1, 1),
        q(p, 1),
        q(1, p),
        q(p * p, 1),
        q(2 * p + 1, 3),
        q(5, p * p),
    ]
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    if rng.gen_ratio(1, 8) {
        return BigRational::zero();
    }
    q(rng.gen_range(-80..=80), rng.gen_range(1..=40))
}

/// A random function constant on components, with the scalar chooser given.
fn random_function(
    rng: &mut ChaCha8Rng,
    x: &SpaceRef,
    k: &ValuedField,
    mut pick: impl FnMut(&mut ChaCha8Rng) -> Scalar,
) -> BoundedFunction {
    let per: Vec<Scalar> = x.components().iter().map(|_| pick(rng)).collect();
    let values = (0..x.len())
        .map(|i| per[x.component_of(i)].clone())
        .collect();
    BoundedFunction::new(x.clone(), k.clone(), values).expect("constant on components")
}

fn scalar_picker(k: &ValuedField) -> impl FnMut(&mut ChaCha8Rng) -> Scalar + '_ {
    move |rng| match k {
        ValuedField::TrivialFinite(_) => {
            let all = k.finite_elements().expect("finite");
            all[rng.gen_range(0..all.len())].clone()
        }
        _ => Scalar::Rational(random_rational(rng)),
    }
}

fn digits(mut code: usize, base: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = code % base;
            code /= base;
            d
        })
        .collect()
}

// ------------------------------------------------------------------ criteria

fn c1(fails: &mut Failures) {
    for n in 0..=4usize {
        let alg = BoolAlg::numbered(n).unwrap();
        let universe = full(n);
        let elems: Vec<u64> = (0..=universe).collect();
        for &a in &elems {
            let ea = Element(a);
            let not = alg.not(ea).0;
            expect!(fails, not == universe ^ a, "¬{a:#b} = {not:#b}");
            expect!(
                fails,
                alg.f2_add(alg.top(), ea).unwrap().0 == universe ^ a,
                "1 + a ≠ ¬a for {a:#b}"
            );
            for &b in &elems {
                let eb = Element(b);
                let (j, m) = (alg.join(ea, eb).0, alg.meet(ea, eb).0);
                expect!(
                    fails,
                    j == a | b && m == a & b,
                    "join/meet of {a:#b}, {b:#b}"
                );
                let sum = alg.f2_add(ea, eb).unwrap().0;
                let prod = alg.f2_mul(ea, eb).unwrap().0;
                expect!(
                    fails,
                    sum == a ^ b && prod == a & b,
                    "F2 ops on {a:#b}, {b:#b}"
                );
                let via = alg.f2_add(Element(sum), Element(prod)).unwrap().0;
                expect!(fails, via == j, "a∨b ≠ a+b+ab for {a:#b}, {b:#b}");
                expect!(
                    fails,
                    alg.leq(ea, eb) == (a & !b == 0),
                    "order on {a:#b}, {b:#b}"
                );
                expect!(
                    fails,
                    alg.join(ea, alg.meet(ea, eb)) == ea && alg.meet(ea, alg.join(ea, eb)) == ea,
                    "absorption"
                );
                for &c in &elems {
                    let ec = Element(c);
                    expect!(
                        fails,
                        alg.meet(ea, alg.join(eb, ec))
                            == alg.join(alg.meet(ea, eb), alg.meet(ea, ec)),
                        "distributivity at {a:#b}, {b:#b}, {c:#b}"
                    );
                    expect!(
                        fails,
                        alg.join(ea, alg.join(eb, ec)) == alg.join(alg.join(ea, eb), ec),
                        "associativity at {a:#b}, {b:#b}, {c:#b}"
                    );
                }
            }
        }
    }
}

/// Families (bit e ⇔ element e) satisfying the filter axioms literally.
fn oracle_filters(n: usize) -> Vec<u64> {
    let size = 1usize << n;
    let top = size - 1;
    (0u64..1 << size)
        .filter(|&fam| {
            let has = |e: usize| fam >> e & 1 == 1;
            has(top)
                && (0..size).all(|a| {
                    !has(a) || (0..size).all(|b| (!has(b) || has(a & b)) && (a & !b != 0 || has(b)))
                })
        })
        .collect()
}

fn family(f: &Filter) -> u64 {
    f.members().iter().fold(0, |m, e| m | 1 << e.0)
}

fn c2(fails: &mut Failures) {
    for n in 0..=3usize {
        let alg = BoolAlg::numbered(n).unwrap();
        let size = 1usize << n;
        let filters = oracle_filters(n);
        for s in 0u64..1 << size {
            let gens: Vec<Element> = members(s).map(|e| Element(e as u64)).collect();
            let least = filters
                .iter()
                .filter(|&&f| s & !f == 0)
                .fold(full(size), |m, &f| m & f);
            let fil = Filter::generated(&alg, &gens).unwrap();
            expect!(
                fails,
                family(&fil) == least,
                "Fil_S for n={n} S={s:#b}: {:#b} vs {least:#b}",
                family(&fil)
            );
            // wedge condition: every finite subset of S has a nonzero meet
            let wedge = (0u64..1 << gens.len())
                .all(|t| members(t).fold(full(n), |m, i| m & gens[i].0) != 0);
            expect!(
                fails,
                fil.is_proper() == wedge,
                "properness for n={n} S={s:#b}"
            );
        }
    }
}

fn c3(fails: &mut Failures) {
    for n in 0..=4usize {
        let alg = BoolAlg::numbered(n).unwrap();
        let filters = oracle_filters(n);
        let proper: Vec<u64> = filters.iter().copied().filter(|f| f & 1 == 0).collect();
        let maximal: BTreeSet<u64> = proper
            .iter()
            .copied()
            .filter(|&f| !proper.iter().any(|&g| g != f && f & !g == 0))
            .collect();
        for &fam in &filters {
            let f = Filter::from_members(&alg, members(fam).map(|e| Element(e as u64))).unwrap();
            expect!(
                fails,
                f.is_ultrafilter() == maximal.contains(&fam),
                "n={n} F={fam:#b}"
            );
        }
        expect!(
            fails,
            maximal.len() == n,
            "n={n}: {} maximal proper filters",
            maximal.len()
        );
        let listed: BTreeSet<u64> = alg
            .enumerate_ultrafilters()
            .iter()
            .map(|u| family(u.filter()))
            .collect();
        expect!(
            fails,
            listed == maximal,
            "n={n}: enumerated ultrafilters differ"
        );
    }
}

fn c4(fails: &mut Failures) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut cases: Vec<(usize, Vec<u64>)> = Vec::new();
    for n in 0..=4 {
        cases.extend(oracle_topologies(n).into_iter().map(|o| (n, o)));
    }
    expect!(
        fails,
        cases.len() == 1 + 1 + 4 + 29 + 355,
        "topology counts: {}",
        cases.len()
    );
    for n in 5..=6 {
        for _ in 0..200 {
            cases.push((n, random_opens(&mut rng, n)));
        }
    }
    for (n, opens) in cases {
        let x = space(n, &opens);
        let uf = UfSpace::build(&x);
        let comps = oracle_components(n, &opens);
        expect!(
            fails,
            uf.len() == comps.len(),
            "|UF| = {} vs {} components, opens {opens:?}",
            uf.len(),
            comps.len()
        );
        let discrete = (0..n).all(|i| opens.contains(&(1 << i)));

        // each ultrafilter is principal at some point; hence the principal image is dense
        for f in uf.ultrafilters() {
            let sets = point_sets(&x, f.filter());
            let cluster = sets.iter().fold(full(n), |m, &s| m & s);
            let at = (0..n).find(|&p| sets == oracle_principal(n, &opens, p));
            expect!(
                fails,
                at.is_some(),
                "non-principal ultrafilter on {opens:?}"
            );
            for p in members(cluster) {
                expect!(
                    fails,
                    sets == oracle_principal(n, &opens, p),
                    "cluster point {p} not principal, {opens:?}"
                );
            }
        }
        expect!(
            fails,
            uf.principal_image_dense(),
            "principal image not dense, {opens:?}"
        );

        let verdict = uf.criterion_report().td_compact_hausdorff.unwrap_or(false);
        expect!(
            fails,
            verdict == discrete,
            "criterion verdict {verdict} on {opens:?}"
        );

        // UF(X) realized is discrete with |components| points, and UF of it changes nothing
        let y = uf.to_space();
        let y_discrete = (0..y.len()).all(|i| y.opens().contains(&(1 << i)));
        let twice = UfSpace::build(&y);
        let images: BTreeSet<usize> = (0..y.len())
            .map(|i| twice.index_of(&twice.principal(i).unwrap()).unwrap())
            .collect();
        expect!(
            fails,
            y_discrete && twice.len() == uf.len() && images.len() == y.len(),
            "UF(UF(X)) ≇ UF(X) for {opens:?}"
        );
    }
}

fn c5(fails: &mut Failures) {
    for nx in 0..=4usize {
        for ny in 0..=3usize {
            let (x, y) = (discrete(nx), discrete(ny));
            let uf = UfSpace::build(&x);
            let realized = uf.to_space();
            for code in 0..ny.pow(nx as u32) {
                let f_vals = digits(code, ny, nx);
                let f = ContinuousMap::new((*x).clone(), (*y).clone(), f_vals.clone()).unwrap();
                let uf_f = match UfMap::new(&f) {
                    Ok(m) => m,
                    Err(e) => {
                        fails.push(format!("UF(f) for {f_vals:?}: {e}"));
                        continue;
                    }
                };
                let principal_idx: Vec<usize> = (0..nx)
                    .map(|p| uf.index_of(&uf.principal(p).unwrap()).unwrap())
                    .collect();
                for p in 0..nx {
                    expect!(
                        fails,
                        uf_f.images()[principal_idx[p]] == f_vals[p],
                        "f ≠ UF(f)∘p at {p}, f={f_vals:?}"
                    );
                    let pushed = pushforward(&f, &uf.principal(p).unwrap()).unwrap();
                    let y_principal = oracle_principal(ny, y.opens(), f_vals[p]);
                    expect!(
                        fails,
                        point_sets(&y, pushed.filter()) == y_principal,
                        "f_*(F(x)) ≠ F(f(x))"
                    );
                }
                // every map UF(X) → Y, kept when continuous and agreeing with f on principals
                let mut agreeing = Vec::new();
                for g_code in 0..ny.pow(uf.len() as u32) {
                    let g = digits(g_code, ny, uf.len());
                    let continuous = y.opens().iter().all(|&v| {
                        let pre = (0..uf.len())
                            .filter(|&i| v >> g[i] & 1 == 1)
                            .fold(0u64, |m, i| m | 1 << i);
                        realized.opens().contains(&pre)
                    });
                    if continuous && (0..nx).all(|p| g[principal_idx[p]] == f_vals[p]) {
                        agreeing.push(g);
                    }
                }
                expect!(
                    fails,
                    agreeing.len() == 1 && agreeing[0] == uf_f.images(),
                    "factorizations of f={f_vals:?}: {agreeing:?}"
                );
            }
        }
    }
}

fn fields_f2_q2_q3() -> [ValuedField; 3] {
    [
        ValuedField::finite(2).unwrap(),
        ValuedField::p_adic(2).unwrap(),
        ValuedField::p_adic(3).unwrap(),
    ]
}

fn c6(fails: &mut Failures) {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut cases: Vec<(usize, Vec<u64>)> = Vec::new();
    for n in 0..=8 {
        cases.push((n, discrete(n).opens().to_vec()));
        for _ in 0..6 {
            cases.push((n, random_opens(&mut rng, n)));
        }
    }
    for (n, opens) in cases {
        let x = space(n, &opens);
        let uf = UfSpace::build(&x);
        let clopens = clopens_of(n, &opens);
        for k in fields_f2_q2_q3() {
            for p in 0..n {
                let m = IdealDescriptor::at_point(x.clone(), k.clone(), p).unwrap();
                // m_x = {f : f(x) = 0}, probed on clopen indicators
                for &u in &clopens {
                    let one_u = BoundedFunction::indicator(x.clone(), k.clone(), u).unwrap();
                    expect!(
                        fails,
                        m.contains(&one_u) == (u >> p & 1 == 0),
                        "m_x membership, {opens:?}"
                    );
                }
                let f_m = uf_from_ideal(&m).unwrap();
                expect!(
                    fails,
                    point_sets(&x, f_m.filter()) == oracle_principal(n, &opens, p),
                    "F(m_x) ≠ F(x), {opens:?} x={p}"
                );
                let back = ideal_from_uf(&x, &k, &f_m).unwrap();
                expect!(
                    fails,
                    back.zero_set_points() == m.zero_set_points(),
                    "ideal round trip, {opens:?}"
                );
            }
            for f in uf.ultrafilters() {
                let m = ideal_from_uf(&x, &k, f).unwrap();
                expect!(fails, m.is_maximal(), "ideal of an ultrafilter not maximal");
                expect!(
                    fails,
                    uf_from_ideal(&m).ok().as_ref() == Some(f),
                    "ultrafilter round trip, {opens:?}"
                );
            }
        }
    }
}

/// inf over g ∈ m of ‖f + g‖, g ranging over `grid` on the components off the zero set.
fn brute_inf(f: &BoundedFunction, zero_component: usize, grid: &[Scalar]) -> BigRational {
    let x = f.space();
    let k = f.field();
    let free: Vec<usize> = (0..x.components().len())
        .filter(|&c| c != zero_component)
        .collect();
    let mut best: Option<BigRational> = None;
    for code in 0..grid.len().pow(free.len() as u32) {
        let choice = digits(code, grid.len(), free.len());
        let norm = (0..x.len())
            .map(|i| {
                let c = x.component_of(i);
                match free.iter().position(|&fc| fc == c) {
                    Some(j) => mag(k, &k.add(f.value(i), &grid[choice[j]])),
                    None => mag(k, f.value(i)),
                }
            })
            .max()
            .unwrap_or_else(BigRational::zero);
        best = Some(match best {
            Some(b) if b <= norm => b,
            _ => norm,
        });
    }
    best.expect("grid is nonempty")
}

fn c7(fails: &mut Failures) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut spaces: Vec<SpaceRef> = (1..=4).map(discrete).collect();
    spaces.push(space(4, &oracle_close(4, &[0b0011, 0b0100, 0b1100])));
    spaces.push(space(3, &oracle_close(3, &[0b001])));
    spaces.push(space(
        6,
        &oracle_close(6, &[0b000011, 0b000100, 0b111000, 0b001000]),
    ));
    let fields = [
        ValuedField::finite(2).unwrap(),
        ValuedField::finite(4).unwrap(),
        ValuedField::p_adic(2).unwrap(),
        ValuedField::p_adic(3).unwrap(),
    ];
    const CASES: usize = 1000;
    for k in &fields {
        let (value_pool, grid): (Vec<Scalar>, Vec<Scalar>) = match k {
            ValuedField::PAdic { p } => {
                let pl: Vec<Scalar> = pool(*p).into_iter().map(Scalar::Rational).collect();
                let mut g: Vec<Scalar> = pl.iter().flat_map(|v| [v.clone(), k.neg(v)]).collect();
                g.sort_by_key(|s| format!("{s:?}"));
                g.dedup();
                (pl, g)
            }
            _ => {
                let all = k.finite_elements().unwrap();
                (all.clone(), all)
            }
        };
        // exhaustive inf over m for finite fields; the grid contains −f off the
        // zero set for p-adic f drawn from the pool
        let oracle_cases = if k.is_trivially_valued() { CASES } else { 60 };
        for x in &spaces {
            let uf = UfSpace::build(x);
            let points = spectrum(x, k);
            let n = x.len();
            let opens = x.opens().to_vec();
            for case in 0..CASES {
                let f = random_function(&mut rng, x, k, |r| {
                    value_pool[r.gen_range(0..value_pool.len())].clone()
                });
                let g = random_function(&mut rng, x, k, scalar_picker(k));
                let fg = f.mul(&g).unwrap();
                let sup = sup_mag(k, f.values());
                expect!(fails, f.sup_norm().to_rational() == sup, "sup norm");
                expect!(
                    fails,
                    algebraic_norm(&f).to_rational() == sup,
                    "algebraic norm ≠ sup for {k}"
                );
                for (c, &comp) in x.components().iter().enumerate() {
                    let p = members(comp).next().unwrap();
                    let u = uf.principal(p).unwrap();
                    // literal inf over the oracle's principal filter
                    let literal = oracle_principal(n, &opens, p)
                        .iter()
                        .map(|&s| {
                            members(s)
                                .map(|i| mag(k, f.value(i)))
                                .max()
                                .unwrap_or_else(BigRational::zero)
                        })
                        .min()
                        .unwrap();
                    let nf = uf_seminorm(&f, &u).unwrap();
                    let m = IdealDescriptor::maximal_at(x.clone(), k.clone(), c).unwrap();
                    expect!(
                        fails,
                        nf.to_rational() == literal,
                        "‖f‖_F {nf} vs {literal} over {k}"
                    );
                    expect!(
                        fails,
                        m.quotient_norm(&f).unwrap() == nf,
                        "‖f+m‖ ≠ ‖f‖_F over {k}"
                    );
                    if n <= 4 && case < oracle_cases {
                        let brute = brute_inf(&f, c, &grid);
                        expect!(
                            fails,
                            brute == nf.to_rational(),
                            "brute inf {brute} vs {nf} over {k}"
                        );
                    }
                    let (ng, nfg) = (uf_seminorm(&g, &u).unwrap(), uf_seminorm(&fg, &u).unwrap());
                    expect!(
                        fails,
                        nfg.to_rational() == nf.to_rational() * ng.to_rational(),
                        "multiplicativity over {k}"
                    );
                    expect!(fails, nf.to_rational() <= sup, "‖f‖_F > ‖f‖ over {k}");
                }
                for pt in &points {
                    let ax = pt.check_axioms(&f, &g).unwrap();
                    expect!(fails, ax.all(), "Berkovich axioms {ax:?} over {k}");
                }
            }
        }
    }
}

fn c8(fails: &mut Failures) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let spaces: Vec<SpaceRef> = vec![
        discrete(1),
        discrete(3),
        discrete(5),
        space(4, &oracle_close(4, &[0b0011, 0b0100, 0b1100])),
    ];
    let fields = [
        ValuedField::p_adic(2).unwrap(),
        ValuedField::p_adic(3).unwrap(),
        ValuedField::p_adic(5).unwrap(),
        ValuedField::finite(4).unwrap(),
    ];
    for k in &fields {
        for case in 0..1000 {
            let x = &spaces[case % spaces.len()];
            let c = rng.gen_range(0..x.components().len());
            let m = IdealDescriptor::maximal_at(x.clone(), k.clone(), c).unwrap();
            let raw = random_function(&mut rng, x, k, scalar_picker(k));
            let vals: Vec<Scalar> = (0..x.len())
                .map(|i| {
                    if x.component_of(i) == c {
                        k.zero()
                    } else {
                        raw.value(i).clone()
                    }
                })
                .collect();
            let g = BoundedFunction::new(x.clone(), k.clone(), vals).unwrap();
            let a = scalar_picker(k)(&mut rng);
            let lhs = (0..x.len())
                .map(|i| mag(k, &k.add(&a, g.value(i))))
                .max()
                .unwrap();
            let rhs = mag(k, &a).max(sup_mag(k, g.values()));
            expect!(fails, lhs == rhs, "‖a+g‖ = {lhs} vs max = {rhs} over {k}");
            expect!(
                fails,
                m.orthogonal_decomposition_check(&a, &g) == Ok(true),
                "library check over {k}"
            );
        }
    }
}

fn c9(fails: &mut Failures) {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut cases: Vec<(usize, Vec<u64>)> = Vec::new();
    for n in 0..=4 {
        cases.extend(oracle_topologies(n).into_iter().map(|o| (n, o)));
    }
    for n in 5..=6 {
        cases.push((n, discrete(n).opens().to_vec()));
        for _ in 0..30 {
            cases.push((n, random_opens(&mut rng, n)));
        }
    }
    for (n, opens) in cases {
        let x = space(n, &opens);
        let uf = UfSpace::build(&x);
        let clopens = clopens_of(n, &opens);
        let mut seen = Vec::new();
        for k in fields_f2_q2_q3() {
            let points = spectrum(&x, &k);
            let bij = spectrum_bijection(&points, &uf);
            expect!(fails, bij.is_some(), "no bijection over {k} for {opens:?}");
            if let Some(b) = &bij {
                // |1_U|_x = 1 exactly when U belongs to the matched ultrafilter
                for (pt, &i) in points.iter().zip(b) {
                    let target = point_sets(&x, uf.ultrafilters()[i].filter());
                    for &u in &clopens {
                        let one_u = BoundedFunction::indicator(x.clone(), k.clone(), u).unwrap();
                        let on = pt.eval(&one_u).unwrap() == AbsValue::One;
                        expect!(
                            fails,
                            on == target.contains(&u),
                            "basis mismatch over {k} on {opens:?}"
                        );
                    }
                }
            }
            seen.push(bij);
        }
        expect!(
            fails,
            seen.iter().all(|b| *b == seen[0]),
            "bijections differ across fields on {opens:?}"
        );
    }
}

/// Set partitions of {0..n-1} via restricted growth strings.
fn oracle_partitions(n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<u64>>) {
        if i == rgs.len() {
            let blocks = (0..=max.min(rgs.len()))
                .map(|b| {
                    (0..rgs.len())
                        .filter(|&j| rgs[j] == b)
                        .fold(0u64, |m, j| m | 1 << j)
                })
                .filter(|&m| m != 0)
                .collect();
            out.push(blocks);
            return;
        }
        let limit = if i == 0 { 0 } else { max + 1 };
        for v in 0..=limit {
            rgs[i] = v;
            rec(i + 1, max.max(v), rgs, out);
        }
    }
    rec(0, 0, &mut rgs, &mut out);
    out
}

fn c10(fails: &mut Failures) {
    let k = ValuedField::p_adic(2).unwrap();
    for (n, bell) in [1, 1, 2, 5, 15, 52, 203].into_iter().enumerate() {
        let x = discrete(n);
        let parts = oracle_partitions(n);
        expect!(
            fails,
            parts.len() == bell,
            "{} partitions of {n}",
            parts.len()
        );
        for blocks in parts {
            let p = Partition::from_masks(n, blocks.iter().copied()).unwrap();
            expect!(
                fails,
                gelfand_roundtrip(&x, &k, &p) == Ok(true),
                "round trip for {blocks:?}"
            );
            let sub = SubalgebraDescriptor::from_partition(x.clone(), k.clone(), &p).unwrap();
            let got: BTreeSet<u64> = sub.separation_relation().blocks().iter().copied().collect();
            let want: BTreeSet<u64> = blocks.iter().copied().collect();
            expect!(
                fails,
                got == want,
                "separation relation {got:?} for {blocks:?}"
            );
        }
    }
}

fn c11(fails: &mut Failures) {
    // worked example: blocks {1,2},{3,4}, g = (1,1,4,4), ‖f − g‖ = 2^-1
    let k2 = ValuedField::p_adic(2).unwrap();
    let x4 = discrete(4);
    let f = BoundedFunction::new(
        x4.clone(),
        k2.clone(),
        [1, 3, 4, 12].map(Scalar::integer).to_vec(),
    )
    .unwrap();
    let a = locally_constant_approx(&f, AbsValue::One).unwrap();
    let blocks: BTreeSet<u64> = a.blocks.blocks().iter().copied().collect();
    expect!(
        fails,
        blocks == BTreeSet::from([0b0011, 0b1100]),
        "worked example blocks {blocks:?}"
    );
    expect!(
        fails,
        a.g.values() == [1, 1, 4, 4].map(Scalar::integer),
        "worked example g"
    );
    let diff: Vec<Scalar> = (0..4).map(|i| k2.sub(f.value(i), a.g.value(i))).collect();
    expect!(
        fails,
        sup_mag(&k2, &diff) == q(1, 2),
        "worked example distance"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let fields = [
        ValuedField::p_adic(2).unwrap(),
        ValuedField::p_adic(3).unwrap(),
        ValuedField::TrivialRational,
    ];
    for case in 0..3000 {
        let k = &fields[case % fields.len()];
        let n = rng.gen_range(1..=6);
        let x = discrete(n);
        let f = random_function(&mut rng, &x, k, scalar_picker(k));
        let (eps, eps_q) = match k {
            ValuedField::PAdic { p } => {
                let e = rng.gen_range(-3i64..=3);
                let base = BigRational::from_integer(BigInt::from(*p));
                let val = if e >= 0 {
                    base.pow(e as i32)
                } else {
                    base.pow(-e as i32).recip()
                };
                (AbsValue::pow(*p, e), val)
            }
            _ => (AbsValue::One, BigRational::one()),
        };
        let a = locally_constant_approx(&f, eps).unwrap();
        let diff: Vec<Scalar> = (0..n).map(|i| k.sub(f.value(i), a.g.value(i))).collect();
        let d = sup_mag(k, &diff);
        expect!(fails, d <= eps_q, "‖f−g‖ = {d} > ε = {eps_q} over {k}");
        expect!(
            fails,
            sup_mag(k, a.g.values()) <= sup_mag(k, f.values()),
            "‖g‖ > ‖f‖ over {k}"
        );
        for &b in a.blocks.blocks() {
            let r = members(b).next().unwrap();
            expect!(
                fails,
                members(b).all(|i| a.g.value(i) == a.g.value(r)),
                "g not constant on a block"
            );
        }
    }
}

// F4 = F2[ω]/(ω² + ω + 1) as pairs (c0, c1) meaning c0 + c1 ω
fn f4_mul(a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
    (
        (a.0 * b.0 + a.1 * b.1) % 2,
        (a.0 * b.1 + a.1 * b.0 + a.1 * b.1) % 2,
    )
}

fn f4_pair(s: &Scalar) -> (u64, u64) {
    match s {
        Scalar::Finite(v) => (
            v.first().copied().unwrap_or(0),
            v.get(1).copied().unwrap_or(0),
        ),
        other => panic!("not an F4 element: {other:?}"),
    }
}

fn gaussian_pair(s: &Scalar) -> (BigRational, BigRational) {
    match s {
        Scalar::Gaussian(a, b) => (a.clone(), b.clone()),
        Scalar::Rational(a) => (a.clone(), BigRational::zero()),
        other => panic!("not a Gaussian rational: {other:?}"),
    }
}

fn c12(fails: &mut Failures) {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let f4 = ValuedField::finite(4).unwrap();
    let f4_elems = f4.finite_elements().unwrap();
    let f2 = ValuedField::finite(2).unwrap();
    let x_two = space(4, &oracle_close(4, &[0b0011, 0b0100, 0b1100]));
    for case in 0..2000 {
        let ext = if case % 2 == 0 {
            Extension::F4OverF2
        } else {
            Extension::GaussianOverQ
        };
        let x = if case % 3 == 0 {
            x_two.clone()
        } else {
            discrete(rng.gen_range(1..=4))
        };
        let summands = rng.gen_range(0..=4);
        let mut terms = Vec::new();
        for _ in 0..summands {
            let (c, g) = match ext {
                Extension::F4OverF2 => (
                    f4_elems[rng.gen_range(0..4)].clone(),
                    random_function(&mut rng, &x, &f2, scalar_picker(&f2)),
                ),
                Extension::GaussianOverQ => (
                    Scalar::gaussian(random_rational(&mut rng), random_rational(&mut rng)),
                    random_function(&mut rng, &x, &ValuedField::TrivialRational, |r| {
                        Scalar::Rational(random_rational(r))
                    }),
                ),
            };
            terms.push((c, g));
        }
        // ι(t) pointwise, and the coordinates g″_0, g″_1 in the basis {1, ω} / {1, i}
        let mut any_nonzero_value = false;
        let mut any_nonzero_coord = false;
        let mut expected_values = Vec::new();
        for i in 0..x.len() {
            match ext {
                Extension::F4OverF2 => {
                    let v = terms.iter().fold((0, 0), |acc, (c, g)| {
                        let gi = f4_pair(g.value(i)).0;
                        let t = f4_mul(f4_pair(c), (gi, 0));
                        ((acc.0 + t.0) % 2, (acc.1 + t.1) % 2)
                    });
                    any_nonzero_value |= v != (0, 0);
                    any_nonzero_coord |= v.0 != 0 || v.1 != 0;
                    expected_values.push(Scalar::Finite(vec![v.0, v.1]));
                }
                Extension::GaussianOverQ => {
                    let v = terms.iter().fold(
                        (BigRational::zero(), BigRational::zero()),
                        |acc, (c, g)| {
                            let (re, im) = gaussian_pair(c);
                            let gi = rational(g.value(i));
                            (acc.0 + re * gi, acc.1 + im * gi)
                        },
                    );
                    let nz = !(v.0.is_zero() && v.1.is_zero());
                    any_nonzero_value |= nz;
                    any_nonzero_coord |= nz;
                    expected_values.push(Scalar::gaussian(v.0, v.1));
                }
            }
        }
        let sup = if any_nonzero_value {
            AbsValue::One
        } else {
            AbsValue::Zero
        };
        let cartesian = if any_nonzero_coord {
            AbsValue::One
        } else {
            AbsValue::Zero
        };
        let t = TensorElement::new(ext, x.clone(), terms).unwrap();
        let image = t.apply_extension().unwrap();
        expect!(
            fails,
            image.values() == expected_values.as_slice(),
            "ι(t) values for {ext:?}"
        );
        expect!(fails, image.sup_norm() == sup, "sup of ι(t) for {ext:?}");
        expect!(
            fails,
            t.tensor_norm() == cartesian,
            "tensor norm for {ext:?}"
        );
        expect!(
            fails,
            t.isometry_check() == Ok(true),
            "isometry check for {ext:?}"
        );
        expect!(
            fails,
            t.naive_bound() >= sup,
            "naive bound below the sup for {ext:?}"
        );
    }
}
