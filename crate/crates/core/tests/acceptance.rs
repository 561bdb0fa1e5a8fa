//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p hemibundle --test acceptance`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hemibundle::bounds::{choose_u128, evaluate, BoundId, BoundValue, Params, Validation};
use hemibundle::constructions::{
    attained_bound_value, construct, expected_size, in_range_points, ConstructionTag, ALL_TAGS,
};
use hemibundle::iso::are_isomorphic;
use hemibundle::search::{
    check_layer_inequality, compare_classes, enumerate_shifted, expected_classes, solve, Engine, Kind, Problem,
    SearchOptions, SearchReport,
};
use hemibundle::shifting::{
    disjointness_family, fully_shift, fully_shift_pair, is_shifted, lex_family, max_partner, shift_once,
};
use hemibundle::{k_subsets, Family, Restriction};

type Outcome = Result<String, String>;

fn eval(id: BoundId, p: &Params) -> Result<BoundValue, String> {
    evaluate(id, p, Validation::Strict).map_err(|e| format!("{id} at {p}: {e}"))
}

fn search(kind: Kind, p: Params, engine: Engine) -> Result<SearchReport, String> {
    let problem = Problem { kind, params: p, engine };
    solve(&problem, &SearchOptions::default()).map_err(|e| format!("{kind} {p} via {engine}: {e}"))
}

fn expect_optimum(rep: &SearchReport) -> Result<(), String> {
    let bound = rep.bound.as_ref().ok_or_else(|| format!("{} {}: no bound in range", rep.kind, rep.params))?;
    if rep.optimum != bound.as_u64() {
        return Err(format!("{} {}: optimum {:?}, bound {}", rep.kind, rep.params, rep.optimum, bound.value));
    }
    Ok(())
}

/// Found classes against the predicted list; `exact` also requires every
/// predicted class to show up.
fn expect_classes(rep: &SearchReport, exact: bool) -> Result<(), String> {
    let bound = rep.bound.as_ref().expect("bound checked first");
    let Some(expected) = expected_classes(rep.kind, &rep.params, bound).map_err(|e| e.to_string())? else {
        return Ok(());
    };
    let cmp = compare_classes(&rep.class_families(), &expected).map_err(|e| e.to_string())?;
    if !cmp.all_expected || (exact && !cmp.all_found) {
        return Err(format!(
            "{} {}: {} unexpected classes, missing {:?}",
            rep.kind, rep.params, cmp.unexpected, cmp.missing
        ));
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for k in 2..=6i64 {
        for t in 0..=4i64 {
            for n in 2 * k + t..=40 {
                let base = Params::nk(n, k).with_t(t);
                let f16 = eval(BoundId::F16, &base)?;
                let m1 = eval(BoundId::Main1, &base.with_r(1))?;
                if f16.value != m1.value {
                    return Err(format!("main1(r=1) != f16 at {base}"));
                }
                checked += 1;
                if k >= 3 && n - k - t + 1 >= 2 {
                    let w23 = eval(BoundId::W23, &base)?;
                    let m2 = eval(BoundId::Main1, &base.with_r(2))?;
                    if w23.value != m2.value {
                        return Err(format!("main1(r=2) != w23 at {base}"));
                    }
                    checked += 1;
                }
            }
        }
        for n in 2 * k..=40 {
            for r in 1..=n - k + 1 {
                let p = Params::nk(n, k).with_r(r);
                let f24 = eval(BoundId::F24, &p)?;
                let m1 = eval(BoundId::Main1, &p.with_t(0))?;
                if f24.value != m1.value {
                    return Err(format!("f24 != main1(t=0) at {p}"));
                }
                checked += 1;
            }
        }
        if k >= 3 {
            for n in 2 * k + 1..=40 {
                for r in 1..=n - k {
                    let div = eval(BoundId::Diversity, &Params::nk(n, k).with_r(r))?;
                    let m1 = eval(BoundId::Main1, &Params::nk(n - 1, k - 1).with_t(1).with_r(r))?;
                    if div.value != m1.value {
                        return Err(format!("diversity != main1(n-1,k-1,1,r) at n={n} k={k} r={r}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    for n in 6..=40i64 {
        for s in 4..=n - 2 {
            let p = Params { n: Some(n), s: Some(s), r: Some(1), ..Default::default() };
            let (main, non) =
                if s % 2 == 0 { (BoundId::Main5Even, BoundId::NonKatonaEven) } else { (BoundId::Main5Odd, BoundId::NonKatonaOdd) };
            if eval(main, &p)?.value != eval(non, &p)?.value {
                return Err(format!("{main}(r=1) != {non} at {p}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} identities"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut attained = 0;
    for tag in ALL_TAGS {
        for id in in_range_points(tag, 12) {
            let built = construct(&id).map_err(|e| format!("{tag} {}: {e}", id.params))?;
            let expected = expected_size(&id).map_err(|e| e.to_string())?;
            if expected.as_u64() != Some(built.total_size() as u64) {
                return Err(format!("{tag} {}: size {} vs closed form {}", id.params, built.total_size(), expected.value));
            }
            if let Some(bound) = attained_bound_value(&id).map_err(|e| e.to_string())? {
                if bound.value != expected.value {
                    return Err(format!("{tag} {}: size {} vs bound {}", id.params, expected.value, bound.value));
                }
                attained += 1;
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("no construction points".into());
    }
    Ok(format!("{checked} constructions, {attained} at a bound"))
}

fn criterion_3() -> Outcome {
    let mut rows = 0;
    for (k, t) in [(2i64, 0i64), (2, 1), (2, 2)] {
        for n in 2 * k + t..=2 * k + t + 2 {
            for r in 1..=n - k - t + 1 {
                let rep = search(Kind::Hemibundled, Params::nk(n, k).with_t(t).with_r(r), Engine::Brute)?;
                expect_optimum(&rep)?;
                if n > 2 * k + t {
                    expect_classes(&rep, true)?;
                }
                for (f, c) in rep.classes.iter().map(|c| (&c.representative, c)) {
                    let g = max_partner(f, k as usize).map_err(|e| e.to_string())?;
                    if c.partner.as_ref() != Some(&g) {
                        return Err(format!("partner mismatch at {}", rep.params));
                    }
                }
                rows += 1;
            }
        }
    }
    let rep = search(Kind::Hemibundled, Params::nk(5, 2).with_t(0).with_r(1), Engine::Brute)?;
    if rep.optimum != Some(8) || rep.classes.len() != 2 {
        return Err(format!("n=5 k=2 t=0 r=1: optimum {:?}, {} classes", rep.optimum, rep.classes.len()));
    }
    Ok(format!("{rows} instances"))
}

fn criterion_4() -> Outcome {
    let mut rows = 0;
    for t in 0..=1i64 {
        for n in 7..=9i64 {
            for r in 1..=5i64.min(n - 3 - t + 1) {
                let rep = search(Kind::Hemibundled, Params::nk(n, 3).with_t(t).with_r(r), Engine::Shifted)?;
                expect_optimum(&rep)?;
                if n > 6 + t {
                    expect_classes(&rep, false)?;
                }
                rows += 1;
            }
        }
    }
    // cross-check at the smallest instance both engines handle
    for r in 1..=5 {
        let p = Params::nk(7, 3).with_t(0).with_r(r);
        let shifted = search(Kind::Hemibundled, p, Engine::Shifted)?;
        let brute = search(Kind::Hemibundled, p, Engine::Brute)?;
        if shifted.optimum != brute.optimum {
            return Err(format!("{p}: shifted {:?} vs brute {:?}", shifted.optimum, brute.optimum));
        }
        if !shifted.maximizers.iter().all(|f| brute.maximizers.contains(f)) {
            return Err(format!("{p}: a shifted maximizer is missing from the brute list"));
        }
        expect_classes(&brute, true)?;
    }
    Ok(format!("{rows} instances, brute cross-check at n=7"))
}

fn criterion_5() -> Outcome {
    let mut rows = 0;
    for n in 4..=7i64 {
        for s in 2..=n - 2 {
            let rep = search(Kind::SUnion, Params { n: Some(n), s: Some(s), ..Default::default() }, Engine::Clique)?;
            expect_optimum(&rep)?;
            expect_classes(&rep, true)?;
            if rep.classes.len() != 1 {
                return Err(format!("n={n} s={s}: {} classes", rep.classes.len()));
            }
            rows += 1;
        }
    }
    for s in [4i64, 5] {
        for r in 1..=3i64 {
            let p = Params { n: Some(7), s: Some(s), r: Some(r), ..Default::default() };
            let rep = search(Kind::Conditioned, p, Engine::Clique)?;
            expect_optimum(&rep)?;
            rows += 1;
        }
    }
    Ok(format!("{rows} instances"))
}

fn criterion_6() -> Outcome {
    let mut rows = 0;
    for n in 7..=9i64 {
        for r in 1..=n - 3 {
            let rep = search(Kind::Diversity, Params::nk(n, 3).with_r(r), Engine::Clique)?;
            expect_optimum(&rep)?;
            expect_classes(&rep, true)?;
            let j = construct(&hemibundle::constructions::ConstructionId::new(
                ConstructionTag::JKr,
                Params::nk(n, 3).with_r(1),
            ))
            .map_err(|e| e.to_string())?;
            let h = construct(&hemibundle::constructions::ConstructionId::new(ConstructionTag::Hk, Params::nk(n, 3)))
                .map_err(|e| e.to_string())?;
            let has = |f: &Family| {
                rep.class_families().iter().any(|c| are_isomorphic(c, f).map(|x| x.is_isomorphic()).unwrap_or(false))
            };
            if r == 1 && !has(j.first()) {
                return Err(format!("n={n} r=1: J_3,1 not among the maximizers"));
            }
            if r >= 2 && (rep.classes.len() != 1 || !has(h.first())) {
                return Err(format!("n={n} r={r}: expected H_3 alone, got {} classes", rep.classes.len()));
            }
            rows += 1;
        }
    }
    Ok(format!("{rows} instances"))
}

fn random_family(rng: &mut ChaCha8Rng, n: usize, sizes: &[usize], keep: impl Fn(&[u64], u64) -> bool) -> Vec<u64> {
    let mut pool: Vec<u64> = sizes.iter().flat_map(|&k| k_subsets(n, k)).collect();
    pool.shuffle(rng);
    let density: f64 = rng.gen_range(0.1..1.0);
    let mut out = Vec::new();
    for m in pool {
        if rng.gen_bool(density) && keep(&out, m) {
            out.push(m);
        }
    }
    out
}

fn fam(n: usize, masks: Vec<u64>) -> Family {
    Family::from_masks(n, masks).expect("masks inside [n]")
}

fn t_compatible(t: usize) -> impl Fn(&[u64], u64) -> bool {
    move |chosen: &[u64], m: u64| m.count_ones() as usize >= t && chosen.iter().all(|&x| (x & m).count_ones() as usize >= t)
}

fn check_lemmas_random() -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let cases = 1000;
    for case in 0..cases {
        // restrictions of shifted (t+1)-intersecting families
        let (k, t) = (rng.gen_range(1..=3usize), rng.gen_range(0..=2usize));
        let n = rng.gen_range(2 * k + t..=10usize.max(2 * k + t));
        let sizes: Vec<usize> = if case % 2 == 0 { vec![k + t] } else { (t + 1..=n).collect() };
        let f = fully_shift(&fam(n, random_family(&mut rng, n, &sizes, t_compatible(t + 1))));
        if !f.is_t_intersecting(t + 1) {
            return Err(format!("shifting broke {}-intersection: {f:?}", t + 1));
        }
        let without_1 = f.restrict(Restriction::Without(1)).map_err(|e| e.to_string())?;
        if !without_1.is_t_intersecting(t + 2) {
            return Err(format!("restriction to sets avoiding 1 not {}-intersecting: {f:?}", t + 2));
        }
        if case % 2 == 0 {
            let with_n = f.restrict(Restriction::With(n)).map_err(|e| e.to_string())?;
            if !with_n.is_t_intersecting(t + 1) {
                return Err(format!("restriction to sets containing n not {}-intersecting: {f:?}", t + 1));
            }
        }

        // size of the part avoiding n in a shifted uniform family
        let g = fully_shift(&fam(n, random_family(&mut rng, n, &[k + t], |_, _| true)));
        if !g.is_empty() {
            let r = rng.gen_range(1..=g.len().min(n - k - t + 1));
            let avoid = g.restrict(Restriction::Without(n)).map_err(|e| e.to_string())?.len();
            let need = if r <= n - k - t { r } else { r - 1 };
            if avoid < need {
                return Err(format!("|F(n̄)| = {avoid} < {need} for r = {r}: {g:?}"));
            }
        }

        // one shift keeps cross-intersection and t-intersection
        let tt = rng.gen_range(1..=2usize);
        let f = random_family(&mut rng, n, &(1..=n).collect::<Vec<_>>(), t_compatible(tt));
        let g = random_family(&mut rng, n, &(1..=n).collect::<Vec<_>>(), |_, m| f.iter().all(|&x| x & m != 0));
        let (f, g) = (fam(n, f), fam(n, g));
        let j = rng.gen_range(2..=n);
        let i = rng.gen_range(1..j);
        let (sf, sg) = (shift_once(&f, i, j).unwrap(), shift_once(&g, i, j).unwrap());
        if !sf.cross_intersects(&sg).unwrap() || !sf.is_t_intersecting(tt) {
            return Err(format!("s_{i},{j} broke the pair {f:?} / {g:?}"));
        }

        // shifted cross-intersecting pairs restricted to n
        let f = random_family(&mut rng, n, &[k + t], |_, _| true);
        let g = random_family(&mut rng, n, &[k], |_, m| f.iter().all(|&x| x & m != 0));
        let (sf, sg) = fully_shift_pair(&fam(n, f), &fam(n, g)).unwrap();
        if !is_shifted(&sf) || !is_shifted(&sg) || !sf.cross_intersects(&sg).unwrap() {
            return Err("pair shifting failed".into());
        }
        let (fn_, gn) = (sf.restrict(Restriction::With(n)).unwrap(), sg.restrict(Restriction::With(n)).unwrap());
        if !fn_.cross_intersects(&gn).unwrap() {
            return Err(format!("F(n), G(n) not cross-intersecting: {sf:?} / {sg:?}"));
        }

        // lexicographic families of the same sizes
        let (a, b) = (rng.gen_range(1..=4usize), rng.gen_range(1..=4usize));
        let n2 = rng.gen_range(a + b + 1..=10);
        let f = random_family(&mut rng, n2, &[a], |_, _| true);
        let g = random_family(&mut rng, n2, &[b], |_, m| f.iter().all(|&x| x & m != 0));
        let lf = lex_family(n2, a, f.len() as u128).unwrap();
        let lg = lex_family(n2, b, g.len() as u128).unwrap();
        if !lf.cross_intersects(&lg).unwrap() {
            return Err(format!("lex families of sizes {} and {} not cross-intersecting", f.len(), g.len()));
        }

        // layer inequality for s-union families
        let n3 = rng.gen_range(4..=9usize);
        let s = rng.gen_range(2..=n3 - 2);
        let u = fam(
            n3,
            random_family(&mut rng, n3, &(0..=s).collect::<Vec<_>>(), |c, m| {
                c.iter().all(|&x| ((x | m).count_ones() as usize) <= s)
            }),
        );
        let layers = u.layer_sizes();
        for row in check_layer_inequality(&u, s).map_err(|e| e.to_string())? {
            let (i, j) = (row.i, s + 1 - row.i);
            let full = layers[i] as u128 == choose_u128(n3, i);
            let empty = layers.get(j).copied().unwrap_or(0) == 0;
            if row.lhs > row.rhs || row.tight != (full && empty) || !row.consistent {
                return Err(format!("layer inequality row {row:?} for {u:?}"));
            }
        }
    }
    Ok(cases)
}

/// `|D_ℓ(F)| >= C(n-r, ℓ)` for `|F| = C(n-r, k-r)`, with equality only for
/// the family of all `k`-sets containing a fixed `r`-set.
fn check_disjointness_lemma() -> Result<(usize, usize, u64), String> {
    const EXHAUSTIVE_LIMIT: u128 = 20_000_000;
    let (mut exhaustive, mut sampled, mut families) = (0, 0, 0u64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0041);
    for n in 2..=8usize {
        for k in 1..=4usize.min(n) {
            let ks: Vec<u64> = k_subsets(n, k).collect();
            for l in 1..n.saturating_sub(k) {
                let ls: Vec<u64> = k_subsets(n, l).collect();
                let disjoint: Vec<u128> = ks
                    .iter()
                    .map(|&a| ls.iter().enumerate().filter(|&(_, &b)| a & b == 0).fold(0u128, |acc, (j, _)| acc | 1 << j))
                    .collect();
                for r in 1..=k {
                    let m = choose_u128(n - r, k - r) as usize;
                    let floor = choose_u128(n - r, l) as u32;
                    let mut verdict = |members: &[usize], dcount: u32| -> Result<(), String> {
                        families += 1;
                        let common = members.iter().fold(u64::MAX, |acc, &i| acc & ks[i]).count_ones() as usize;
                        let star = common >= r;
                        if dcount < floor || (dcount == floor) != star {
                            return Err(format!("n={n} k={k} l={l} r={r}: |D| = {dcount}, star = {star}"));
                        }
                        Ok(())
                    };
                    // every family is isomorphic to one containing the first k-set
                    if choose_u128(ks.len() - 1, m - 1) <= EXHAUSTIVE_LIMIT {
                        let mut members = vec![0usize];
                        walk(&disjoint, &mut members, disjoint[0], m, &mut |mem, d| verdict(mem, d.count_ones()))?;
                        exhaustive += 1;
                    } else {
                        let shifted = enumerate_shifted(n, k, |f| f.len() == m).map_err(|e| e.to_string())?;
                        let mut samples: Vec<Vec<usize>> = shifted
                            .iter()
                            .map(|f| f.masks().iter().map(|x| ks.iter().position(|y| y == x).unwrap()).collect())
                            .collect();
                        for _ in 0..1000 {
                            let mut idx: Vec<usize> = (0..ks.len()).collect();
                            idx.shuffle(&mut rng);
                            idx.truncate(m);
                            samples.push(idx);
                        }
                        for s in &samples {
                            let d = s.iter().fold(0u128, |acc, &i| acc | disjoint[i]);
                            verdict(s, d.count_ones())?;
                            let f = Family::from_masks(n, s.iter().map(|&i| ks[i])).unwrap();
                            if disjointness_family(&f, l).unwrap().len() as u32 != d.count_ones() {
                                return Err("disjointness family size disagrees with the bit count".into());
                            }
                        }
                        sampled += 1;
                    }
                }
            }
        }
    }
    Ok((exhaustive, sampled, families))
}

type Visit<'a> = dyn FnMut(&[usize], u128) -> Result<(), String> + 'a;

fn walk(
    disjoint: &[u128],
    members: &mut Vec<usize>,
    acc: u128,
    m: usize,
    visit: &mut Visit<'_>,
) -> Result<(), String> {
    if members.len() == m {
        return visit(members, acc);
    }
    let start = members.last().map_or(0, |&x| x + 1);
    let need = m - members.len();
    for i in start..=disjoint.len().saturating_sub(need) {
        members.push(i);
        walk(disjoint, members, acc | disjoint[i], m, visit)?;
        members.pop();
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let cases = check_lemmas_random()?;
    let (ex, sampled, families) = check_disjointness_lemma()?;
    Ok(format!(
        "{cases} random cases per lemma; disjointness lemma on {families} families, \
         exhaustive for {ex} parameter sets, shifted plus sampled for {sampled}"
    ))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let cases = 10_000;
    for case in 0..cases {
        let n = rng.gen_range(2..=8usize);
        let density: f64 = rng.gen_range(0.0..0.6);
        let masks: Vec<u64> = (0..1u64 << n).filter(|_| rng.gen_bool(density)).collect();
        let f = fam(n, masks);
        if f.complement().complement() != f {
            return Err(format!("complement is not an involution on {f:?}"));
        }
        for t in 0..=n {
            if f.is_t_intersecting(t) != f.complement().is_s_union(n - t) {
                return Err(format!("duality fails at t={t} for {f:?}"));
            }
        }
        if f.diversity() != f.diversity_by_restriction() {
            return Err(format!("diversity definitions disagree on {f:?}"));
        }
        let i = rng.gen_range(1..=n);
        let part = |r| f.restrict(r).unwrap().len();
        if f.len() != part(Restriction::With(i)) + part(Restriction::Without(i)) {
            return Err(format!("restriction at {i} does not partition {f:?}"));
        }
        if n >= 2 {
            let j = (i % n) + 1;
            let four = part(Restriction::Both(i, j))
                + part(Restriction::WithWithout(i, j))
                + part(Restriction::WithWithout(j, i))
                + part(Restriction::Neither(i, j));
            if four != f.len() {
                return Err(format!("restriction at {i},{j} does not partition {f:?}"));
            }
        }
        if case % 10 == 0 && n <= 6 {
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.shuffle(&mut rng);
            let g = if rng.gen_bool(0.5) {
                f.permute(&perm).unwrap()
            } else {
                fam(n, (0..1u64 << n).filter(|_| rng.gen_bool(density)).collect())
            };
            let brute = permutations(n).iter().any(|p| f.permute(p).unwrap() == g);
            if are_isomorphic(&f, &g).unwrap().is_isomorphic() != brute {
                return Err(format!("isomorphism test disagrees with brute force on {f:?} / {g:?}"));
            }
        }
    }
    Ok(format!("{cases} random families"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 formula identities", Duration::from_secs(5), criterion_1),
        ("2 construction sizes", Duration::from_secs(30), criterion_2),
        ("3 brute-force oracle", Duration::from_secs(600), criterion_3),
        ("4 shifted engine", Duration::from_secs(600), criterion_4),
        ("5 s-union", Duration::from_secs(900), criterion_5),
        ("6 diversity", Duration::from_secs(900), criterion_6),
        ("7 lemma properties", Duration::from_secs(600), criterion_7),
        ("8 duality and involution", Duration::from_secs(30), criterion_8),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let line = match outcome {
            Ok(detail) if elapsed <= budget => format!("PASS criterion {name}: {detail} ({elapsed:.2?})"),
            Ok(detail) => format!("FAIL criterion {name}: {detail}, but took {elapsed:.2?} > {budget:?}"),
            Err(why) => format!("FAIL criterion {name}: {why} ({elapsed:.2?})"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
