use cwlift::bounds::{bound_report_with, ReportOptions};
use cwlift::codes::{brute_force_max, verify_code, SearchBudget};
use cwlift::lifting::{construct, ConstructOptions, SearchOptions};
use cwlift::Error;

const BUDGET: SearchBudget = SearchBudget { max_vertices: 2_000, max_nodes: 200_000 };

#[test]
fn constructions_sit_inside_the_bracket_and_below_the_optimum() {
    let opts = ConstructOptions { search: SearchOptions::new(0, 100_000), ..Default::default() };
    let mut checked = 0;
    for n in 3usize..=9 {
        for w in 2..=4.min(n) {
            for d in 2..=2 * w {
                for q in 2u16..=5 {
                    let code = match construct(n, d, w, q, &opts) {
                        Ok(c) => c,
                        // Impossible targets end the s-descent short; the partial code still counts.
                        Err(Error::Partial { partial, .. }) => *partial,
                        Err(Error::Precondition(_)) => continue,
                        Err(e) => panic!("({n},{d},{w})_{q}: {e}"),
                    };
                    assert!(verify_code(&code).valid, "({n},{d},{w})_{q}");
                    let r = bound_report_with::<i64>(n as u64, d as u64, w as u64, q.into(), &ReportOptions::default())
                        .unwrap();
                    let len = code.len() as i64;
                    assert!(len <= r.best_upper, "({n},{d},{w})_{q}: {len} > upper {}", r.best_upper);
                    if let Ok(bf) = brute_force_max(n, d, w, q, BUDGET) {
                        assert!(code.len() <= bf.size, "({n},{d},{w})_{q}: {len} beats the optimum {}", bf.size);
                        assert!(bf.size as i64 <= r.best_upper && bf.size as i64 >= r.best_lower, "({n},{d},{w})_{q}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} instances within the oracle budget");
}

#[test]
fn report_with_construction_lifts_the_lower_bound() {
    let opts = ReportOptions { construct: Some(ConstructOptions::default()), lambda: None };
    let r = bound_report_with::<i128>(20, 5, 4, 3, &opts).unwrap();
    let built = r.bounds.iter().find(|b| b.provenance.starts_with("constructed:")).unwrap();
    assert!(built.value <= r.best_upper);
    assert_eq!(r.best_lower, r.bounds.iter().filter(|b| b.is_lower()).map(|b| b.value).max().unwrap());
}
