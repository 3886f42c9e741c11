use addseq_core::gf2::{is_power_of_two, p_k};
use addseq_core::{generate, Rule};

/// Slot `i` of `P_k` tells whether the odd value `n + 2k + 2(i - 1)` lies in `V(2,n)`.
fn assert_windows_match(n: usize, k_max: u64) {
    let nn = n as u64;
    let run = generate(&Rule::v(), &[2, nn], nn + 2 * k_max + 2 * nn).unwrap();
    for k in 0..=k_max {
        let p = p_k(n, k).unwrap();
        for i in 1..=n {
            let value = nn + 2 * k + 2 * (i as u64 - 1);
            assert_eq!(p.slot(i), run.contains(value), "n={n} k={k} slot {i} value {value}");
        }
    }
}

#[test]
fn p_windows_track_odd_terms() {
    for n in [7, 11, 13, 15, 19, 21, 23, 25, 27, 29, 31] {
        assert!(!is_power_of_two(n - 1));
        assert_windows_match(n, 40 * n as u64);
    }
}

#[test]
fn p_windows_hold_below_third_even_term() {
    for n in [5usize, 9, 17, 33] {
        let nn = n as u64;
        // The window at k covers values up to n + 2k + 2(n - 1); keep it below 2n^2 + 2 + n.
        let k_max = (2 * nn * nn + 2 - 2 * nn) / 2;
        assert_windows_match(n, k_max);
    }
}
