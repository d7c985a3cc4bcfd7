use dglie::freelie::{dim_formula_wlb2, expand, pairbracket_element, wlb2_pair_indices, Alphabet, FreeLie};
use dglie::exactlin::KeyedSubspace;

/// Dimensions of the (word length j, b-count i) pieces of the free Lie algebra
/// on two odd generators, rows j = 1..9, columns i = 0..8.
const TABLE2: [[usize; 9]; 9] = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, 2, 2, 1, 0, 0, 0, 0],
    [0, 1, 3, 3, 3, 1, 0, 0, 0],
    [0, 1, 3, 5, 5, 3, 1, 0, 0],
    [0, 1, 3, 7, 8, 7, 3, 1, 0],
    [0, 1, 4, 9, 14, 14, 9, 4, 1],
];
const TABLE2_TOTALS: [usize; 9] = [2, 3, 2, 3, 6, 11, 18, 30, 56];

fn two_odd(da: u32, db: u32) -> FreeLie {
    FreeLie::new(Alphabet::from_pairs(&[("a", da), ("b", db)]).unwrap())
}

#[test]
fn bigraded_grid_matches_reference_table() {
    let fl = two_odd(1, 1);
    for j in 1..=9u32 {
        let row: Vec<usize> = (0..9u32).map(|i| if i <= j { fl.dim_multidegree(&[j - i, i]) } else { 0 }).collect();
        assert_eq!(row, TABLE2[(j - 1) as usize], "row {j}");
        assert_eq!(row.iter().sum::<usize>(), TABLE2_TOTALS[(j - 1) as usize]);
        assert_eq!(fl.dim_wordlength(j), TABLE2_TOTALS[(j - 1) as usize]);
    }
}

#[test]
fn closed_form_matches_brute_force_up_to_14() {
    let fl = two_odd(3, 5);
    for n in 1..=14u32 {
        assert_eq!(fl.basis_bigraded(n, 1, 2).len(), dim_formula_wlb2(n), "n = {n}");
    }
}

#[test]
fn pair_bracket_families_are_bases() {
    let fl = two_odd(3, 3);
    let alph = fl.alphabet().clone();
    for n in 2..=12u32 {
        let mut span: KeyedSubspace<Vec<u16>> = KeyedSubspace::new();
        let pairs = wlb2_pair_indices(n);
        for &(i, j) in &pairs {
            let t = expand(&alph, &pairbracket_element(i, j, 0, 1));
            assert!(span.insert(t.terms()), "dependent at n = {n}, pair ({i},{j})");
        }
        assert_eq!(pairs.len(), dim_formula_wlb2(n));
        // same span as the brute-force layer
        for m in fl.basis_bigraded(n, 1, 2) {
            assert!(span.contains(m.tensor.terms()));
        }
    }
}
