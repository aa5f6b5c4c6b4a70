//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use invseq::bijection::{is_3201_by_characterization_with, SECOND_MAX_RULE};
use invseq::sequence::all_sequences;
use invseq::trees::{c_identity_holds, count_trees_exhaustive, operator_counts};
use invseq::*;
use num_bigint::{BigInt, BigUint};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

fn fixture(name: &str) -> BFile {
    BFile::read(&Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counts(p: &Pattern, n_max: usize) -> Vec<BigUint> {
    count_vector(p, n_max).counts
}

fn to_int(v: &[BigUint]) -> Vec<BigInt> {
    v.iter().map(|c| BigInt::from(c.clone())).collect()
}

const LISTED_CLASSES: [&[&str]; 8] = [
    &["1011", "1101", "1110"],
    &["2110", "2101", "2011"],
    &["0221", "0212"],
    &["0312", "0321"],
    &["1102", "1012"],
    &["2201", "2210"],
    &["2301", "2310"],
    &["3201", "3210", "3012"],
];

fn class_sets(classes: &[WilfClass]) -> BTreeSet<BTreeSet<String>> {
    classes
        .iter()
        .filter(|c| c.patterns.len() > 1)
        .map(|c| c.patterns.iter().map(|p| p.to_string()).collect())
        .collect()
}

fn each_listed_class_within_one(classes: &[WilfClass], extra: &[&str]) -> std::result::Result<(), String> {
    for (i, listed) in LISTED_CLASSES.iter().enumerate() {
        let mut members = listed.to_vec();
        if i == 1 {
            members.extend_from_slice(extra);
        }
        let hosts: BTreeSet<usize> = members
            .iter()
            .map(|w| classes.iter().position(|c| c.contains(&pat(w))).unwrap())
            .collect();
        ensure(hosts.len() == 1, || format!("{members:?} split across classes"))?;
    }
    Ok(())
}

fn wilf_sweep() -> Outcome {
    let classes = classify(4, 9);
    let total: usize = classes.iter().map(|c| c.patterns.len()).sum();
    ensure(total == 75, || format!("{total} patterns classified"))?;
    each_listed_class_within_one(&classes, &["2001"])?;
    let listed: BTreeSet<String> = LISTED_CLASSES.iter().flat_map(|c| c.iter().map(|s| s.to_string())).collect();
    let others: Vec<String> = class_sets(&classes)
        .into_iter()
        .map(|c| c.into_iter().filter(|p| !listed.contains(p) && p != "2001").collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .map(|c| c.join("/"))
        .collect();
    Ok(format!("{} classes; also coinciding through n = 9: {}", classes.len(), others.join(", ")))
}

fn divergence_at_ten() -> Outcome {
    let d = first_divergence(&pat("2001"), &pat("2011"), 10);
    ensure(d == Some(10), || format!("first divergence {d:?}"))?;
    let (a, b) = (counts(&pat("2001"), 10), counts(&pat("2011"), 10));
    let classes = classify(4, 10);
    each_listed_class_within_one(&classes, &[])?;
    let wanted: BTreeSet<BTreeSet<String>> = LISTED_CLASSES
        .iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect();
    let found = class_sets(&classes);
    ensure(found == wanted, || format!("non-singleton classes at n <= 10: {found:?}"))?;
    Ok(format!(
        "|I_10(2001)| = {} vs |I_10(2011)| = {}; at n <= 10 only the listed classes remain",
        a[9], b[9]
    ))
}

fn conjecture_3012() -> Outcome {
    let d = first_divergence(&pat("3012"), &pat("3201"), 10);
    ensure(d.is_none(), || format!("diverges at {d:?}"))?;
    Ok(format!("|I_10| = {}", counts(&pat("3012"), 10)[9]))
}

/// `tan + sec` built from the sine and cosine series, independent of the
/// tree ODE.
fn tan_plus_sec(order: usize) -> RationalSeries {
    let sin = RationalSeries::sine(order, Flavor::Exponential);
    let sec = RationalSeries::cosine(order, Flavor::Exponential).inverse().unwrap();
    &(&sin * &sec) + &sec
}

fn euler_numbers() -> Outcome {
    let euler = tan_plus_sec(11).egf_counts().map_err(|e| e.to_string())?;
    let ode = series_tk(2, 11).egf_counts().map_err(|e| e.to_string())?;
    ensure(euler == ode, || "tan+sec disagrees with the T_2 ODE".into())?;
    let got = to_int(&counts(&pat("000"), 9));
    ensure(got == euler[2..=10], || format!("{got:?} vs {:?}", &euler[2..=10]))?;
    Ok(format!("E_2..E_10 = {:?}", euler[2..=10].iter().map(|v| v.to_string()).collect::<Vec<_>>()))
}

fn trees_0000() -> Outcome {
    let got = counts(&pat("0000"), 8);
    let file = fixture("trees_k3.txt");
    for n in 1..=8 {
        let series = count_trees_bounded(n + 1, 3);
        ensure(got[n - 1] == series, || format!("n = {n}: {} vs series {series}", got[n - 1]))?;
        if n < 7 {
            let exhaustive = count_trees_exhaustive(n + 1, 3, false);
            ensure(series == exhaustive.into(), || format!("n = {n}: exhaustive {exhaustive}"))?;
        }
    }
    let cmp = file.compare(&to_int(&got), 2);
    ensure(cmp.is_match(), || format!("{cmp:?}"))?;
    Ok("n <= 8 against T_3 series, n + 1 <= 7 against exhaustive trees".into())
}

fn trees_0111() -> Outcome {
    let got = counts(&pat("0111"), 8);
    let operator = operator_counts(2, 8);
    for n in 1..=8 {
        let series = count_trees_root_unbounded(n + 1, 2).map_err(|e| e.to_string())?;
        ensure(got[n - 1] == series, || format!("n = {n}: {} vs exp(T_2 - 1) {series}", got[n - 1]))?;
        ensure(BigInt::from(series) == operator[n], || format!("n = {n}: operator {}", operator[n]))?;
    }
    let cmp = fixture("b000772.txt").compare(&to_int(&got), 1);
    ensure(matches!(cmp, Comparison::Match { length: 8, .. }), || format!("{cmp:?}"))?;
    Ok("n <= 8 against exp(T_2 - 1), the operator recurrence and the b-file".into())
}

fn binary_words() -> Outcome {
    let mut checked = 0;
    for ell in 2..=5usize {
        for zero_at in 0..ell {
            let mut word = vec![1u32; ell];
            word[zero_at] = 0;
            let p = Pattern::new(&word).unwrap();
            for j in 0..=8 {
                for k in 0..=8 {
                    let formula = binary_avoider_formula(j as u64, k as u64, ell as u64).unwrap();
                    let brute = count_binary_avoiders_bruteforce(j, k, &p).unwrap();
                    ensure(formula == brute, || format!("{p} j={j} k={k}: {formula} vs {brute}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (pattern, j, k) cases, every zero position"))
}

fn subset_sum() -> Outcome {
    for word in ["0111", "0212", "0221", "0312", "0321"] {
        let p = pat(word);
        for n in 1..=8 {
            let lhs = count_avoiders(&BoundSet::interval(n), &p);
            let rhs = theorem31_rhs(n, &p.entries()[1..]).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{word} n = {n}: {lhs} vs {rhs}"))?;
            if n <= 7 {
                let brute = all_sequences(&BoundSet::interval(n)).filter(|e| !contains(e, &p)).count();
                ensure(lhs == brute.into(), || format!("{word} n = {n}: brute {brute}"))?;
            }
        }
    }
    Ok("5 patterns, n <= 8".into())
}

const S_GROUPS: [&[&str]; 6] = [
    &["210", "201"],
    &["1011", "1101", "1110"],
    &["1012", "1102"],
    &["2011", "2101", "2110"],
    &["2201", "2210"],
    &["2301", "2310"],
];

fn s_equivalences() -> Outcome {
    let mut sets = 0;
    for s in BoundSet::subsets_of_interval(8) {
        for group in S_GROUPS {
            let first = count_avoiders(&s, &pat(group[0]));
            for q in &group[1..] {
                let other = count_avoiders(&s, &pat(q));
                ensure(first == other, || format!("S = {s}: {} {first} vs {q} {other}", group[0]))?;
            }
        }
        sets += 1;
    }
    Ok(format!("{sets} sets, {} groups", S_GROUPS.len()))
}

fn refined_tables() -> Outcome {
    let groups: [(&[&str], RefinementMode); 5] = [
        (&["1011", "1101", "1110"], RefinementMode::Terminal(0)),
        (&["1012", "1102"], RefinementMode::Terminal(1)),
        (&["2011", "2101", "2110"], RefinementMode::Initial(1)),
        (&["2201", "2210"], RefinementMode::Initial(2)),
        (&["2301", "2310"], RefinementMode::NonInversion),
    ];
    let mut cells = 0;
    for s in BoundSet::subsets_of_interval(7) {
        for (group, mode) in groups {
            let first = refined_table(&s, &pat(group[0]), mode);
            ensure(first.total() == count_avoiders(&s, &pat(group[0])), || {
                format!("S = {s}: {} table total", group[0])
            })?;
            for q in &group[1..] {
                ensure(refined_table(&s, &pat(q), mode) == first, || {
                    format!("S = {s}: {} vs {q} under {mode:?}", group[0])
                })?;
            }
            cells += first.counts.len();
        }
    }
    Ok(format!("128 sets, {cells} nonzero cells compared"))
}

fn bijection() -> Outcome {
    let (p3210, p3201) = (pat("3210"), pat("3201"));
    let mut total = 0;
    for n in 1..=8 {
        let target: HashSet<Vec<u32>> = all_sequences(&BoundSet::interval(n))
            .filter(|f| !contains(f, &p3201))
            .collect();
        let mut image = HashSet::new();
        for e in enumerate_avoiders(&BoundSet::interval(n), &p3210).map(SInvSeq::into_entries) {
            let f = map_3210_to_3201(&e).map_err(|err| format!("{e:?}: {err}"))?;
            let layers = maxima_layers(&e);
            let fixed = layers.first.iter().chain(&layers.second).all(|&i| e[i] == f[i]);
            let (mut a, mut b) = (e.clone(), f.clone());
            a.sort_unstable();
            b.sort_unstable();
            ensure(fixed && a == b, || format!("{e:?} -> {f:?} moves layers or values"))?;
            ensure(target.contains(&f), || format!("{e:?} -> {f:?} contains 3201"))?;
            let back = map_3201_to_3210(&f).map_err(|err| err.to_string())?;
            ensure(back == e, || format!("{e:?} -> {f:?} -> {back:?}"))?;
            ensure(image.insert(f), || format!("{e:?} collides"))?;
        }
        ensure(image == target, || format!("n = {n}: image misses {} avoiders", target.len() - image.len()))?;
        total += image.len();
    }
    Ok(format!("{total} sequences over n <= 8"))
}

fn characterizations() -> Outcome {
    let (p3210, p3201) = (pat("3210"), pat("3201"));
    let mut checked = 0;
    for n in 1..=8 {
        for e in all_sequences(&BoundSet::interval(n)) {
            ensure(is_3210_by_partition(&e) != contains(&e, &p3210), || format!("3210 at {e:?}"))?;
            ensure(
                is_3201_by_characterization_with(&e, SECOND_MAX_RULE) != contains(&e, &p3201),
                || format!("3201 at {e:?}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sequences, second maximum rule {SECOND_MAX_RULE:?}"))
}

fn conjecture_0021() -> Outcome {
    let report = check_0021_conjecture(11).map_err(|e| e.to_string())?;
    ensure(report.holds(), || format!("fails at x^{:?}", report.first_failure))?;
    let cmp = fixture("fe0021.txt").compare(&to_int(&report.terms), 1);
    ensure(matches!(cmp, Comparison::Match { length: 11, .. }), || format!("{cmp:?}"))?;
    Ok(format!("A_1..A_11 = {:?}", report.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>()))
}

fn c_identity() -> Outcome {
    for k in 2..=6 {
        ensure(c_identity_holds(k).map_err(|e| e.to_string())?, || format!("k = {k}"))?;
    }
    Ok("k = 2..6".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("Wilf sweep, length 4, n <= 9", wilf_sweep),
        ("2001 and 2011 diverge first at n = 10", divergence_at_ten),
        ("|I_n(3012)| = |I_n(3201)| for n <= 10", conjecture_3012),
        ("|I_n(000)| = E_(n+1) for n <= 9", euler_numbers),
        ("|I_n(0000)| = |L_(n+1,3)| for n <= 8", trees_0000),
        ("|I_n(0111)| = |L'_(n+1,2)| for n <= 8", trees_0111),
        ("binary single-zero words, l <= 5, j, k <= 8", binary_words),
        ("subset-sum identity, n <= 8", subset_sum),
        ("S-level equivalences, S in [8]", s_equivalences),
        ("refined tables, S in [7]", refined_tables),
        ("3210 -> 3201 bijection, n <= 8", bijection),
        ("3210 and 3201 characterizations, n <= 8", characterizations),
        ("0021 functional equation mod x^12", conjecture_0021),
        ("c_(m,k) polynomial identity, k = 2..6", c_identity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}  {name}  [{detail}] ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}  {name}  [{detail}] ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
