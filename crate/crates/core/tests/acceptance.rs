//! Acceptance report: one PASS/FAIL line per criterion, followed by details.
//! Always exits 0 so the report is reference in full; the verdicts are the output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twisted_double::centre::{Centre, CentreCharacter};
use twisted_double::cochain::{cohomology, hs_check, solve_coboundary, theta_d3};
use twisted_double::etale::{
    admissible_subgroups, etale_enumerate, lagrangian_character, lagrangian_character_with, lagrangian_data,
    quotient_cocycle, transport, EtaleDatum,
};
use twisted_double::group::builtin::{builtin_group, dihedral};
use twisted_double::group::{quotient_with_section, Subgroup};
use twisted_double::modular::{diagonal, invariants_of, ProductCentre};
use twisted_double::projective::{character_table, projective_character_table};
use twisted_double::{Cochain, Cyc, Error, GroupTable};

type Outcome = (bool, Vec<String>);

fn run(id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f));
    let took = start.elapsed();
    let (ok, details) = match res {
        Ok(o) => o,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, vec![format!("panicked: {msg}")])
        }
    };
    let in_time = took <= limit;
    let pass = ok && in_time;
    println!("{} {id}. {title} ({:.1}s)", if pass { "PASS" } else { "FAIL" }, took.as_secs_f64());
    for d in details {
        println!("     {d}");
    }
    if !in_time {
        println!("     exceeded the {}s limit", limit.as_secs());
    }
    pass
}

fn d3() -> Arc<GroupTable> {
    Arc::new(dihedral(3))
}

fn group(spec: &str) -> Arc<GroupTable> {
    Arc::new(builtin_group(&spec.parse().unwrap()).unwrap())
}

fn one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

/// Reference entry: 0, ±1, 2, w, w-, e, -e, hJ (η^J), 1+w, 1+w-.
fn entry(s: &str) -> Cyc {
    let w = |k| Cyc::root(k, 3);
    match s {
        "1+w" => &Cyc::one(1) + &w(1),
        "1+w-" => &Cyc::one(1) + &w(-1),
        "w" => w(1),
        "w-" => w(-1),
        "e" => Cyc::root(1, 4),
        "-e" => -Cyc::root(1, 4),
        h if h.starts_with('h') => Cyc::root(h[1..].parse().unwrap(), 9),
        k => Cyc::from_int(k.parse().unwrap(), 1),
    }
}

fn rows(t: &[&str]) -> Vec<Vec<Cyc>> {
    t.iter().map(|r| r.split_whitespace().map(entry).collect()).collect()
}

const HEAD: [&str; 3] = ["1 1 1 0 0 0 0 0", "1 1 -1 0 0 0 0 0", "2 -1 0 0 0 0 0 0"];

/// The four reference tables, keyed by k in θ^k.
fn reference_table(k: i64) -> Vec<Vec<Cyc>> {
    let tail: [&str; 5] = match k {
        0 => ["0 0 0 1 1 1 0 0", "0 0 0 1 w w- 0 0", "0 0 0 1 w- w 0 0", "0 0 0 0 0 0 1 1", "0 0 0 0 0 0 1 -1"],
        3 => ["0 0 0 1 1 1 0 0", "0 0 0 1 w w- 0 0", "0 0 0 1 w- w 0 0", "0 0 0 0 0 0 1 e", "0 0 0 0 0 0 1 -e"],
        2 => ["0 0 0 1 h1 h2 0 0", "0 0 0 1 h4 h8 0 0", "0 0 0 1 h7 h3 0 0", "0 0 0 0 0 0 1 1", "0 0 0 0 0 0 1 -1"],
        1 => ["0 0 0 1 h1 h2 0 0", "0 0 0 1 h4 h8 0 0", "0 0 0 1 h7 h3 0 0", "0 0 0 0 0 0 1 e", "0 0 0 0 0 0 1 -e"],
        _ => unreachable!(),
    };
    let mut all: Vec<&str> = HEAD.to_vec();
    all.extend(tail);
    rows(&all)
}

fn shown(c: &Centre, chi: &CentreCharacter) -> Vec<Cyc> {
    c.display_pairs().iter().map(|&(f, x)| chi.get(f, x)).collect()
}

/// Whether `ours` equals σ(`reference`) as a multiset of rows for some σ in Gal(ℚ(ζ₃₆)/ℚ).
fn same_up_to_galois(ours: &[Vec<Cyc>], reference: &[Vec<Cyc>]) -> Option<i64> {
    (1..36i64).filter(|k| num_integer::gcd(*k, 36) == 1).find(|&k| {
        let mut left: Vec<&Vec<Cyc>> = ours.iter().collect();
        reference.iter().all(|row| {
            let r: Vec<Cyc> = row.iter().map(|z| z.embed(36).galois(k)).collect();
            match left.iter().position(|o| **o == r) {
                Some(i) => {
                    left.swap_remove(i);
                    true
                }
                None => false,
            }
        })
    })
}

fn c1() -> Outcome {
    let g = d3();
    let h3 = cohomology(&g, 3).unwrap().invariants;
    let h2 = cohomology(&g, 2).unwrap().invariants;
    (h3 == vec![6] && h2.is_empty(), vec![format!("H³ invariants {h3:?}, H² invariants {h2:?}")])
}

fn c2() -> Outcome {
    let g = d3();
    let t = theta_d3(&g, 1);
    let cocycle = t.is_cocycle();
    let hs = hs_check(&t);
    let nontrivial: Vec<bool> = (1..6).map(|k| solve_coboundary(&theta_d3(&g, k)).is_err()).collect();
    let trivial: Vec<bool> = [6, 12, -6].iter().map(|&k| solve_coboundary(&theta_d3(&g, k)).is_ok()).collect();
    let ok = cocycle && hs && nontrivial.iter().all(|&b| b) && trivial.iter().all(|&b| b);
    (
        ok,
        vec![
            format!("θ cocycle over all 6⁴ tuples: {cocycle}; double-complex check: {hs}"),
            format!("θ^k not a coboundary for k=1..5: {nontrivial:?}; θ^6m coboundary (m=1,2,-1): {trivial:?}"),
        ],
    )
}

fn c3() -> Outcome {
    let g = d3();
    let mut ok = true;
    let mut details = Vec::new();
    for k in [0, 3, 2, 1] {
        let c = Centre::new(&theta_d3(&g, k)).unwrap();
        let ours: Vec<Vec<Cyc>> = c.simple_characters().iter().map(|s| shown(&c, s)).collect();
        let reference = reference_table(k);
        match same_up_to_galois(&ours, &reference) {
            Some(s) => details.push(format!("θ^{k}: 8 rows match the reference table (Galois σ: ζ ↦ ζ^{s})")),
            None => {
                ok = false;
                let mut fixed = reference.clone();
                fixed[5][5] = Cyc::root(5, 9);
                let after = same_up_to_galois(&ours, &fixed);
                details.push(format!(
                    "θ^{k}: no match with the reference table; with reference χ₅(r,r²) = η³ replaced by η⁵: {}",
                    if after.is_some() { "all 8 rows match" } else { "still no match" }
                ));
                // Rows of one sector differ by characters of C₃, so χ₅/χ₃ must be (1, ω^j, ω^{2j}).
                let ratio_r = &reference[5][4] * &reference[3][4].conj();
                let ratio_r2 = &reference[5][5] * &reference[3][5].conj();
                let expected = &ratio_r * &ratio_r;
                details.push(format!(
                    "θ^{k}: reference χ₅/χ₃ on (r,r),(r,r²) is not (λ, λ²) for a cube root λ: {}",
                    ratio_r2 != expected && ratio_r.pow(3).is_one()
                ));
            }
        }
    }
    (ok, details)
}

fn orders(v: &[(Subgroup, Cochain)]) -> Vec<usize> {
    v.iter().map(|(h, _)| h.order()).collect()
}

fn c4() -> Outcome {
    let g = d3();
    let expected = [(0, vec![1, 2, 3, 6]), (3, vec![1, 3]), (2, vec![1, 2]), (1, vec![1])];
    let mut ok = true;
    let mut details = Vec::new();
    for (k, want) in expected {
        let got = orders(&admissible_subgroups(&theta_d3(&g, k)).unwrap());
        ok &= got == want;
        details.push(format!("θ^{k}: admissible subgroup orders {got:?}"));
    }
    (ok, details)
}

fn c5() -> Outcome {
    let g = d3();
    let mut ok = true;
    let mut details = Vec::new();
    // (k, subgroup order, reference row with L({e}) at |G|, reference decomposition)
    let cases: [(i64, usize, &str, &str); 9] = [
        (0, 1, "6 0 0 0 0 0 0 0", "χ₀+χ₁+2χ₂"),
        (0, 2, "3 0 1 0 0 0 1 1", "χ₀+χ₂+χ₆"),
        (0, 3, "2 2 0 2 2 2 0 0", "χ₀+χ₁+2χ₃"),
        (0, 6, "1 1 1 1 1 1 1 1", "χ₀+χ₃+χ₆"),
        (3, 1, "6 0 0 0 0 0 0 0", "χ₀+χ₁+2χ₂"),
        (3, 3, "2 2 0 2 1+w- 1+w 0 0", "χ₀+χ₁+χ₃+χ₅"),
        (2, 1, "6 0 0 0 0 0 0 0", "χ₀+χ₁+2χ₂"),
        (2, 2, "3 0 1 0 0 0 1 1", "χ₀+χ₂+χ₆"),
        (1, 1, "6 0 0 0 0 0 0 0", "χ₀+χ₁+2χ₂"),
    ];
    for (k, h, row, dec) in cases {
        let c = Centre::new(&theta_d3(&g, k)).unwrap();
        let data = lagrangian_data(c.alpha()).unwrap();
        let d = data.iter().find(|d| d.h.order() == h).unwrap();
        let chi = lagrangian_character(&c, d).unwrap();
        let ours = shown(&c, &chi);
        let reference = rows(&[row]).remove(0);
        let m = c.decompose(&chi).unwrap();
        let ours_dec = twisted_double::centre::decomposition_string(&m, false);
        let row_ok = same_up_to_galois(std::slice::from_ref(&ours), &[reference]).is_some();
        let dec_ok = ours_dec == dec;
        ok &= row_ok && dec_ok;
        let show: Vec<String> = ours.iter().map(|z| twisted_double::scalars::pretty(z, false)).collect();
        details.push(format!(
            "θ^{k} |H|={h}: row ({}) {} reference; {} {} reference {}",
            show.join(","),
            if row_ok { "=" } else { "≠" },
            ours_dec,
            if dec_ok { "=" } else { "≠" },
            dec
        ));
        if !dec_ok {
            let twists: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, _)| {
                    let s = &c.simple_characters()[i];
                    let f = c.simple_objects()[i].class_rep;
                    format!("χ{i}: {}", twisted_double::scalars::pretty(&s.get(f, f), false))
                })
                .collect();
            details.push(format!("  summand values χ(f,f) of the computed algebra: {}", twists.join(", ")));
            let s5 = &c.simple_characters()[5];
            details.push(format!(
                "  reference summand χ₅ has χ₅(r,r)/χ₅(r,e) = {} ≠ 1, so it cannot occur in a commutative connected algebra",
                twisted_double::scalars::pretty(&s5.get(1, 1), false)
            ));
        }
    }
    (ok, details)
}

fn class_ok(c: &Centre) -> bool {
    let s = c.simple_characters();
    s.iter().all(|x| c.is_class_function(x))
        && s.iter().enumerate().all(|(i, a)| {
            s.iter().enumerate().all(|(j, b)| {
                let v = c.scalar_product(a, b).unwrap();
                if i == j {
                    v == one()
                } else {
                    v == BigRational::from_integer(BigInt::from(0))
                }
            })
        })
}

fn c6() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);

    let mut cocycles: Vec<(String, Cochain)> = (0..6).map(|k| (format!("D₃ θ^{k}"), theta_d3(&d3(), k))).collect();
    for spec in ["cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "product:cyclic:2,cyclic:2", "q8"] {
        let g = group(spec);
        for (i, a) in cohomology(&g, 3).unwrap().all_classes().into_iter().enumerate() {
            cocycles.push((format!("{spec} class {i}"), a.clone()));
            let beta = Cochain::from_fn(g.clone(), 2, |x| {
                twisted_double::Phase::new(((x[0] * 5 + x[1] * x[1] + 3 * x[0] * x[1]) % 7) as i64, 7)
            });
            if i == 1 {
                cocycles.push((format!("{spec} class {i} + coboundary"), a.add(&beta.differential().unwrap())));
            }
        }
    }
    let mut centres = Vec::new();
    for (name, a) in &cocycles {
        let c = Centre::new(a).unwrap();
        if !class_ok(&c) {
            ok = false;
            details.push(format!("orthonormality or class-function property fails for {name}"));
        }
        centres.push((name.clone(), c));
    }
    details.push(format!("orthonormality and class functions of simples: {} (G, α) pairs", centres.len()));

    let mut lagr = 0;
    for (name, c) in &centres {
        let n = c.group().order() as u64;
        for d in lagrangian_data(c.alpha()).unwrap() {
            let chi = lagrangian_character(c, &d).unwrap();
            lagr += 1;
            let good = c.is_class_function(&chi)
                && c.dimension(&chi).unwrap() == n
                && c.scalar_product(&c.simple_characters()[0], &chi).unwrap() == one()
                && c.decompose(&chi).is_ok();
            if !good {
                ok = false;
                details.push(format!("Lagrangian character check fails for {name}, |H|={}", d.h.order()));
            }
        }
    }
    details.push(format!(
        "{lagr} Lagrangian characters: class functions, dimension Σ_f χ_L(f,e) = |G|, unit multiplicity 1"
    ));

    let mut solved = 0;
    for i in 0..200 {
        let g = [d3(), group("q8"), group("product:cyclic:2,cyclic:2"), group("cyclic:6")][i % 4].clone();
        let den = [2, 3, 4, 6, 12][rng.gen_range(0..5)];
        let vals: Vec<i64> = (0..g.order().pow(2)).map(|_| rng.gen_range(0..den)).collect();
        let n = g.order();
        let gamma = Cochain::from_fn(g.clone(), 2, |x| {
            if x[0] == 0 || x[1] == 0 {
                twisted_double::Phase::ZERO
            } else {
                twisted_double::Phase::new(vals[x[0] * n + x[1]], den)
            }
        });
        let beta = gamma.differential().unwrap();
        match solve_coboundary(&beta) {
            Ok(w) if w.differential().unwrap() == beta => solved += 1,
            _ => ok = false,
        }
    }
    details.push(format!("coboundary solver round trip: {solved}/200 random 2-cochains"));

    let mut same = 0;
    for i in 0..50 {
        let (_, c) = &centres[[0, 3, 2, 4][i % 4]];
        let g = c.group().clone();
        let data = lagrangian_data(c.alpha()).unwrap();
        let d = &data[rng.gen_range(0..data.len())];
        let want = c.decompose(&lagrangian_character(c, d).unwrap()).unwrap();
        let x = rng.gen_range(0..g.order());
        let moved = transport(c.alpha(), d, x);
        let seed: u64 = rng.gen();
        let pick = move |coset: &[usize]| coset[(seed as usize).wrapping_add(coset[0] * 7) % coset.len()];
        let chi = lagrangian_character_with(c, &moved, pick).unwrap();
        if c.decompose(&chi).ok() == Some(want) {
            same += 1;
        } else {
            ok = false;
        }
    }
    details.push(format!("representative independence under conjugation and coset choice: {same}/50"));
    (ok, details)
}

fn c7() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    let instances: [(&str, Vec<usize>, Vec<usize>); 3] =
        [("dihedral:3", vec![1], vec![]), ("cyclic:4", vec![2], vec![1]), ("q8", vec![], vec![])];
    for (spec, fgen, _) in instances.iter() {
        let g = group(spec);
        let h = Subgroup::whole(g.clone());
        let f = if *spec == "q8" {
            let z = (0..g.order()).find(|&x| x != 0 && (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))).unwrap();
            Subgroup::generated(g.clone(), &[z])
        } else {
            Subgroup::generated(g.clone(), fgen)
        };
        let (mut count, mut cocycles, mut sections, mut classes) = (0, 0, 0, Vec::new());
        for alpha in cohomology(&g, 3).unwrap().all_classes() {
            for d in etale_enumerate(&alpha).unwrap().into_iter().filter(|d| d.h == h && d.f == f) {
                count += 1;
                let q = quotient_with_section(&d.h, &d.f).unwrap();
                let Ok(c) = quotient_cocycle(&alpha, &d, &q) else {
                    ok = false;
                    continue;
                };
                cocycles += 1;
                classes.push(solve_coboundary(&c).is_ok());
                let mut all_sections = true;
                for z in f.elements().iter().skip(1) {
                    let s: Vec<usize> = q.section.iter().map(|&x| if x == 0 { 0 } else { g.mul(x, *z) }).collect();
                    let c2 = quotient_cocycle(&alpha, &d, &q.with_section(s).unwrap());
                    all_sections &= matches!(c2, Ok(c2) if solve_coboundary(&c2.sub(&c)).is_ok());
                }
                sections += all_sections as usize;
                ok &= all_sections;
            }
        }
        ok &= count > 0 && cocycles == count;
        let trivial_classes = classes.iter().filter(|&&b| b).count();
        details.push(format!(
            "({spec}, |F|={}): {count} étale data, {cocycles} quotient cocycles, {sections} section-independent up to coboundary, {trivial_classes} cohomologically trivial",
            f.order()
        ));
    }
    let g = d3();
    let c2 = Subgroup::generated(g.clone(), &[3]);
    let rejected = matches!(quotient_with_section(&Subgroup::whole(g.clone()), &c2), Err(Error::NotNormal));
    ok &= rejected;
    details.push(format!("(D₃, C₂) rejected as not normal: {rejected}"));
    let mut fh = 0;
    for spec in ["dihedral:3", "cyclic:4", "q8"] {
        let g = group(spec);
        for alpha in cohomology(&g, 3).unwrap().all_classes() {
            for d in lagrangian_data(&alpha).unwrap() {
                let e: EtaleDatum = d.to_etale();
                let q = quotient_with_section(&e.h, &e.f).unwrap();
                let c = quotient_cocycle(&alpha, &e, &q).unwrap();
                let good = c.group().order() == 1 && c.is_zero();
                ok &= good;
                fh += good as usize;
            }
        }
    }
    details.push(format!("F = H gives the zero cocycle on the trivial group: {fh} data"));
    (ok, details)
}

fn c8() -> Outcome {
    let g = d3();
    let pc = ProductCentre::new(&Cochain::zero(g.clone(), 3)).unwrap();
    let invs = invariants_of(&pc).unwrap();
    let (dl, dr) = (pc.left.dimensions(), pc.right.dimensions());
    let mut ok = true;
    for m in &invs {
        let s: u64 = (0..dl.len()).flat_map(|i| (0..dr.len()).map(move |j| (i, j))).map(|(i, j)| m.matrix[i][j] * dl[i] * dr[j]).sum();
        ok &= m.matrix[0][0] == 1 && s == 36;
    }
    let diag = diagonal(&g, pc.product.group());
    let d = invs.iter().find(|m| m.datum.h == diag && m.datum.gamma.is_zero()).unwrap();
    let perm = (0..8).all(|k| d.matrix[k].iter().sum::<u64>() == 1 && d.matrix.iter().map(|r| r[k]).sum::<u64>() == 1);
    ok &= perm;
    let perms = invs.iter().filter(|m| m.matrix.iter().all(|r| r.iter().sum::<u64>() == 1)).count();
    (
        ok,
        vec![
            format!("{} invariants; all Z₀₀ = 1 and Σ Z_ij d_i d_j = 36 with d = {dl:?}", invs.len()),
            format!("diagonal datum is a permutation matrix: {perm}; permutation invariants in total: {perms}"),
        ],
    )
}

fn c9() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    let mut tested = 0;
    for spec in ["dihedral:3", "dihedral:4", "q8", "cyclic:4", "product:cyclic:2,cyclic:2", "product:cyclic:3,cyclic:3", "product:cyclic:2,cyclic:4"] {
        let g = group(spec);
        let h2 = cohomology(&g, 2).unwrap();
        let mut mus = h2.all_classes();
        if mus.is_empty() {
            mus.push(Cochain::zero(g.clone(), 2));
        }
        for mu in mus {
            let t = projective_character_table(&g, &mu).unwrap();
            let s: u64 = (0..t.len()).map(|i| t.degree(i).pow(2)).sum();
            ok &= s == g.order() as u64;
            tested += 1;
        }
    }
    details.push(format!("Σ deg² = |H| on {tested} (H, μ) pairs"));
    let g = group("product:cyclic:2,cyclic:2");
    let mu = cohomology(&g, 2).unwrap().generators[0].clone();
    let t = projective_character_table(&g, &mu).unwrap();
    let single = t.len() == 1 && t.degree(0) == 2;
    ok &= single;
    details.push(format!("ℤ/2×ℤ/2 with nontrivial μ: {} character(s) of degree {:?}", t.len(), (0..t.len()).map(|i| t.degree(i)).collect::<Vec<_>>()));
    let mut same = true;
    for spec in ["dihedral:3", "dihedral:4", "q8", "cyclic:5", "symmetric:4"] {
        let g = group(spec);
        let ordinary = character_table(&g).unwrap();
        let proj = projective_character_table(&g, &Cochain::zero(g.clone(), 2)).unwrap();
        let a: Vec<Vec<Cyc>> = (0..ordinary.len()).map(|i| (0..g.order()).map(|x| ordinary.value(i, x).clone()).collect()).collect();
        let b: Vec<Vec<Cyc>> = proj.rows.clone();
        same &= a.len() == b.len() && a.iter().all(|r| b.contains(r));
    }
    ok &= same;
    details.push(format!("μ = 0 reproduces the ordinary tables of D₃, D₄, Q₈, ℤ/5, S₄: {same}"));
    (ok, details)
}

fn main() {
    println!("acceptance report");
    let secs = Duration::from_secs;
    let results = [
        run(1, "H³(D₃) = ℤ/6 and H²(D₃) trivial", secs(10), c1),
        run(2, "θ is a cocycle of order 6 passing the double-complex check", secs(30), c2),
        run(3, "simple-character tables of Z(D₃, θ^k), k = 0, 3, 2, 1", secs(240), c3),
        run(4, "admissible subgroups of D₃ for each twist", secs(60), c4),
        run(5, "Lagrangian characters and decompositions of Z(D₃, θ^k)", secs(60), c5),
        run(6, "property suite", secs(600), c6),
        run(7, "quotient-cocycle suite", secs(60), c7),
        run(8, "modular invariants of D₃", secs(600), c8),
        run(9, "projective character tables", secs(120), c9),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("{passed}/{} criteria pass", results.len());
}
