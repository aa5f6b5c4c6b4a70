//! Named verification suites for `invseq check`.

use std::collections::HashSet;

use invseq::bijection::{is_3201_by_characterization_with, SECOND_MAX_RULE};
use invseq::sequence::all_sequences;
use invseq::trees::{c_identity_holds, count_trees_exhaustive, operator_counts};
use invseq::*;
use num_bigint::{BigInt, BigUint};

use crate::guard;
use crate::report::{Cell, RunReport};

pub struct CheckSpec {
    pub name: &'static str,
    pub default_n: usize,
    pub about: &'static str,
    run: fn(&mut RunReport, usize) -> Result<()>,
    cost: fn(usize) -> f64,
}

pub const COLUMNS: [&str; 5] = ["check", "item", "expected", "computed", "verdict"];

pub const CHECKS: &[CheckSpec] = &[
    CheckSpec {
        name: "thm31",
        default_n: 8,
        about: "|I_n(0 s)| equals the sum over S in [n-1] of |I_S(s)|, n <= N",
        run: thm31,
        cost: |n| 7.0 * guard::subset_nodes(n),
    },
    CheckSpec {
        name: "sum-210",
        default_n: 8,
        about: "|I_n(0312)| = |I_n(0321)| = sum over S in [n-1] of |I_S(210)|, n <= N",
        run: sum_210,
        cost: |n| 3.0 * guard::subset_nodes(n),
    },
    CheckSpec {
        name: "lemma-binary",
        default_n: 8,
        about: "binary single-zero patterns of length 2..5: C(j + min(k, l - 2), j) by brute force, j, k <= N",
        run: lemma_binary,
        cost: |n| 14.0 * 4f64.powi(n as i32 + 1),
    },
    CheckSpec {
        name: "s-equiv",
        default_n: 8,
        about: "equal |I_S(p)| within each S-level group, all S in [N]",
        run: s_equiv,
        cost: |n| 13.0 * guard::subset_nodes(n + 1),
    },
    CheckSpec {
        name: "refined-terminal",
        default_n: 7,
        about: "refined tables of 1011/1101/1110 (zeros, ones) and 1012/1102 (terminal 1-repeat), all S in [N]",
        run: refined_terminal,
        cost: |n| 5.0 * guard::subset_nodes(n + 1),
    },
    CheckSpec {
        name: "refined-initial",
        default_n: 7,
        about: "refined tables of 2011/2101/2110 (initial 1-repeat) and 2201/2210 (initial 2-repeat), all S in [N]",
        run: refined_initial,
        cost: |n| 5.0 * guard::subset_nodes(n + 1),
    },
    CheckSpec {
        name: "refined-noninv",
        default_n: 7,
        about: "refined tables of 2301/2310 (initial non-inversion statistic and positive set), all S in [N]",
        run: refined_noninv,
        cost: |n| 2.0 * guard::subset_nodes(n + 1),
    },
    CheckSpec {
        name: "bijection-3210",
        default_n: 8,
        about: "the 3210 -> 3201 map is a bijection with inverse, n <= N",
        run: bijection_3210,
        cost: |n| 3.0 * guard::interval_nodes(n),
    },
    CheckSpec {
        name: "characterizations",
        default_n: 8,
        about: "layer characterizations of 3210 and 3201 agree with containment on I_n, n <= N",
        run: characterizations,
        cost: |n| 2.0 * guard::interval_nodes(n),
    },
    CheckSpec {
        name: "conj-3012",
        default_n: 10,
        about: "|I_n(3012)| = |I_n(3201)| for n <= N",
        run: conj_3012,
        cost: |n| 2.0 * guard::interval_nodes(n),
    },
    CheckSpec {
        name: "conj-0021",
        default_n: 11,
        about: "1/((1 - A)(1 + A)^2) = 1 - x modulo x^(N+1), A_n = |I_n(0021)|",
        run: conj_0021,
        cost: guard::interval_nodes,
    },
    CheckSpec {
        name: "divergence-2001",
        default_n: 10,
        about: "first n <= N with |I_n(2001)| != |I_n(2011)| is 10 (none when N < 10)",
        run: divergence_2001,
        cost: |n| 2.0 * guard::interval_nodes(n),
    },
    CheckSpec {
        name: "euler",
        default_n: 9,
        about: "|I_n(000)| = E_(n+1) from tan + sec, n <= N",
        run: euler,
        cost: guard::interval_nodes,
    },
    CheckSpec {
        name: "trees-0000",
        default_n: 8,
        about: "|I_n(0000)| = |L_(n+1,3)| from the tree ODE (and brute force for n + 1 <= 7), n <= N",
        run: trees_0000,
        cost: guard::interval_nodes,
    },
    CheckSpec {
        name: "trees-0111",
        default_n: 8,
        about: "|I_n(0111)| = |L'_(n+1,2)| from exp(T_2 - 1) and the operator recurrence, n <= N",
        run: trees_0111,
        cost: guard::interval_nodes,
    },
    CheckSpec {
        name: "c-identity",
        default_n: 6,
        about: "k! sum x^j/j! = (x+1)^k + sum c_(m,k) (x+1)^m for k = 2..N",
        run: c_identity,
        cost: |_| 1.0,
    },
];

pub fn find(name: &str) -> Option<&'static CheckSpec> {
    CHECKS.iter().find(|c| c.name == name)
}

pub fn names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

impl CheckSpec {
    pub fn estimated_nodes(&self, n: usize) -> f64 {
        (self.cost)(n)
    }

    pub fn run(&self, report: &mut RunReport, n: usize) -> Result<()> {
        (self.run)(report, n)
    }
}

fn pat(s: &str) -> Pattern {
    s.parse().expect("literal pattern")
}

/// Appends a comparison row and folds it into the report's verdicts.
fn compare(r: &mut RunReport, check: &str, item: impl Into<Cell>, expected: impl ToString, computed: impl ToString) -> bool {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    let ok = expected == computed;
    let item = item.into();
    r.row(vec![check.into(), item.clone(), expected.clone().into(), computed.clone().into(), Cell::from(if ok { "PASS" } else { "FAIL" })]);
    if !ok {
        r.check(format!("{check} {}", item.flat()), false, format!("expected {expected}, computed {computed}"));
    }
    ok
}

fn summarize(r: &mut RunReport, check: &str) {
    if r.passed() {
        let rows = r.rows.len();
        r.check(check, true, format!("{rows} comparisons"));
    }
}

fn thm31(r: &mut RunReport, n_max: usize) -> Result<()> {
    for word in ["011", "021", "0111", "0212", "0221", "0312", "0321"] {
        let p = pat(word);
        for n in 1..=n_max {
            let rhs = theorem31_rhs(n, &p.entries()[1..])?;
            compare(r, "thm31", format!("{word} n={n}"), count_avoiders(&BoundSet::interval(n), &p), rhs);
        }
    }
    summarize(r, "thm31");
    Ok(())
}

fn sum_210(r: &mut RunReport, n_max: usize) -> Result<()> {
    let p210 = pat("210");
    for n in 1..=n_max {
        let sum: BigUint = BoundSet::subsets_of_interval(n - 1).map(|s| count_avoiders(&s, &p210)).sum();
        for word in ["0312", "0321"] {
            compare(r, "sum-210", format!("{word} n={n}"), &sum, count_avoiders(&BoundSet::interval(n), &pat(word)));
        }
    }
    summarize(r, "sum-210");
    Ok(())
}

fn lemma_binary(r: &mut RunReport, bound: usize) -> Result<()> {
    for ell in 2..=5usize {
        for zero_at in 0..ell {
            let mut word = vec![1u32; ell];
            word[zero_at] = 0;
            let p = Pattern::new(&word)?;
            for j in 0..=bound {
                for k in 0..=bound {
                    let formula = binary_avoider_formula(j as u64, k as u64, ell as u64)?;
                    let brute = count_binary_avoiders_bruteforce(j, k, &p)?;
                    compare(r, "lemma-binary", format!("{p} j={j} k={k}"), formula, brute);
                }
            }
        }
    }
    summarize(r, "lemma-binary");
    Ok(())
}

const S_GROUPS: [&[&str]; 6] = [
    &["210", "201"],
    &["1011", "1101", "1110"],
    &["1012", "1102"],
    &["2011", "2101", "2110"],
    &["2201", "2210"],
    &["2301", "2310"],
];

fn s_equiv(r: &mut RunReport, n: usize) -> Result<()> {
    for s in BoundSet::subsets_of_interval(n) {
        for group in S_GROUPS {
            let first = count_avoiders(&s, &pat(group[0]));
            for q in &group[1..] {
                compare(r, "s-equiv", format!("S={s} {} vs {q}", group[0]), &first, count_avoiders(&s, &pat(q)));
            }
        }
    }
    summarize(r, "s-equiv");
    Ok(())
}

fn table_digest(t: &RefinedTable) -> String {
    format!("cells={} total={}", t.counts.len(), t.total())
}

fn refined(r: &mut RunReport, check: &str, n: usize, groups: &[(&[&str], RefinementMode)]) -> Result<()> {
    for s in BoundSet::subsets_of_interval(n) {
        for &(group, mode) in groups {
            let first = refined_table(&s, &pat(group[0]), mode);
            for q in &group[1..] {
                let other = refined_table(&s, &pat(q), mode);
                let item = format!("S={s} {} vs {q} by {mode:?}", group[0]);
                let computed = if other == first {
                    table_digest(&other)
                } else {
                    format!("{} (differs)", table_digest(&other))
                };
                compare(r, check, item, table_digest(&first), computed);
            }
        }
    }
    summarize(r, check);
    Ok(())
}

fn refined_terminal(r: &mut RunReport, n: usize) -> Result<()> {
    refined(
        r,
        "refined-terminal",
        n,
        &[
            (&["1011", "1101", "1110"], RefinementMode::Terminal(0)),
            (&["1012", "1102"], RefinementMode::Terminal(1)),
        ],
    )
}

fn refined_initial(r: &mut RunReport, n: usize) -> Result<()> {
    refined(
        r,
        "refined-initial",
        n,
        &[
            (&["2011", "2101", "2110"], RefinementMode::Initial(1)),
            (&["2201", "2210"], RefinementMode::Initial(2)),
        ],
    )
}

fn refined_noninv(r: &mut RunReport, n: usize) -> Result<()> {
    refined(r, "refined-noninv", n, &[(&["2301", "2310"], RefinementMode::NonInversion)])
}

fn bijection_3210(r: &mut RunReport, n_max: usize) -> Result<()> {
    let (p3210, p3201) = (pat("3210"), pat("3201"));
    for n in 1..=n_max {
        let bounds = BoundSet::interval(n);
        let target: HashSet<Vec<u32>> = enumerate_avoiders(&bounds, &p3201).map(SInvSeq::into_entries).collect();
        let mut image = HashSet::new();
        let mut bad = 0usize;
        let mut sources = 0usize;
        for e in enumerate_avoiders(&bounds, &p3210).map(SInvSeq::into_entries) {
            sources += 1;
            let Ok(f) = map_3210_to_3201(&e) else {
                bad += 1;
                continue;
            };
            let layers = maxima_layers(&e);
            let fixed = layers.first.iter().chain(&layers.second).all(|&i| e[i] == f[i]);
            let (mut a, mut b) = (e.clone(), f.clone());
            a.sort_unstable();
            b.sort_unstable();
            let back = map_3201_to_3210(&f).ok();
            if !fixed || a != b || !target.contains(&f) || back.as_ref() != Some(&e) {
                bad += 1;
            }
            image.insert(f);
        }
        compare(r, "bijection-3210", format!("n={n} |I_n(3210)| vs |I_n(3201)|"), sources, target.len());
        compare(r, "bijection-3210", format!("n={n} image size"), target.len(), image.len());
        compare(r, "bijection-3210", format!("n={n} image is I_n(3201)"), true, image == target);
        compare(r, "bijection-3210", format!("n={n} faulty inputs"), 0, bad);
    }
    summarize(r, "bijection-3210");
    Ok(())
}

fn characterizations(r: &mut RunReport, n_max: usize) -> Result<()> {
    let (p3210, p3201) = (pat("3210"), pat("3201"));
    for n in 1..=n_max {
        let (mut wrong_3210, mut wrong_3201) = (0usize, 0usize);
        for e in all_sequences(&BoundSet::interval(n)) {
            wrong_3210 += usize::from(is_3210_by_partition(&e) == contains(&e, &p3210));
            wrong_3201 += usize::from(is_3201_by_characterization_with(&e, SECOND_MAX_RULE) == contains(&e, &p3201));
        }
        compare(r, "characterizations", format!("n={n} 3210 disagreements"), 0, wrong_3210);
        compare(r, "characterizations", format!("n={n} 3201 disagreements"), 0, wrong_3201);
    }
    summarize(r, "characterizations");
    Ok(())
}

fn conj_3012(r: &mut RunReport, n_max: usize) -> Result<()> {
    let a = count_vector(&pat("3201"), n_max).counts;
    let b = count_vector(&pat("3012"), n_max).counts;
    for (n, (x, y)) in a.iter().zip(&b).enumerate() {
        compare(r, "conj-3012", format!("n={}", n + 1), x, y);
    }
    summarize(r, "conj-3012");
    Ok(())
}

fn conj_0021(r: &mut RunReport, n_max: usize) -> Result<()> {
    let report = check_0021_conjecture(n_max)?;
    for (n, c) in report.lhs.iter().enumerate() {
        let target = match n {
            0 => "1",
            1 => "-1",
            _ => "0",
        };
        compare(r, "conj-0021", format!("[x^{n}] with A_{n} = {}", if n == 0 { "-".into() } else { report.terms[n - 1].to_string() }), target, c);
    }
    summarize(r, "conj-0021");
    Ok(())
}

fn divergence_2001(r: &mut RunReport, n_max: usize) -> Result<()> {
    let d = first_divergence(&pat("2001"), &pat("2011"), n_max);
    let expected = if n_max >= 10 { "10".to_string() } else { "none".to_string() };
    let computed = d.map_or("none".to_string(), |n| n.to_string());
    compare(r, "divergence-2001", format!("first divergence, n <= {n_max}"), expected, computed);
    summarize(r, "divergence-2001");
    Ok(())
}

fn euler(r: &mut RunReport, n_max: usize) -> Result<()> {
    let order = n_max + 1;
    let sin = RationalSeries::sine(order, Flavor::Exponential);
    let sec = RationalSeries::cosine(order, Flavor::Exponential).inverse()?;
    let euler = (&(&sin * &sec) + &sec).egf_counts()?;
    let got = count_vector(&pat("000"), n_max).counts;
    for (i, c) in got.iter().enumerate() {
        compare(r, "euler", format!("n={} E_{}", i + 1, i + 2), &euler[i + 2], c);
    }
    summarize(r, "euler");
    Ok(())
}

fn trees_0000(r: &mut RunReport, n_max: usize) -> Result<()> {
    let got = count_vector(&pat("0000"), n_max).counts;
    for (i, c) in got.iter().enumerate() {
        let n = i + 1;
        compare(r, "trees-0000", format!("n={n} series"), count_trees_bounded(n + 1, 3), c);
        if n < 7 {
            compare(r, "trees-0000", format!("n={n} exhaustive"), count_trees_exhaustive(n + 1, 3, false), c);
        }
    }
    summarize(r, "trees-0000");
    Ok(())
}

fn trees_0111(r: &mut RunReport, n_max: usize) -> Result<()> {
    let got = count_vector(&pat("0111"), n_max).counts;
    let operator = operator_counts(2, n_max);
    for (i, c) in got.iter().enumerate() {
        let n = i + 1;
        compare(r, "trees-0111", format!("n={n} exp(T_2 - 1)"), count_trees_root_unbounded(n + 1, 2)?, c);
        compare(r, "trees-0111", format!("n={n} operator"), &operator[n], BigInt::from(c.clone()));
    }
    summarize(r, "trees-0111");
    Ok(())
}

fn c_identity(r: &mut RunReport, k_max: usize) -> Result<()> {
    for k in 2..=k_max {
        compare(r, "c-identity", format!("k={k}"), true, c_identity_holds(k)?);
    }
    summarize(r, "c-identity");
    Ok(())
}
