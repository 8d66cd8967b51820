use horadam::graph::{adjacent, bfs_distances, build_graph, color_of, neighbor_words};
use horadam::hamilton::hamiltonian_path;
use horadam::sequences::{
    cube_coefficients, degree_table, edge_count, edge_count_binomial, edge_count_convolution, vertex_count,
    vertex_count_closed,
};
use horadam::series::{expand_rational_series, Order, Series};
use horadam::structure::{median_of_triple, rho_project, sigma_embed};
use horadam::words::{decompose_blocks, enumerate_words, is_valid_word};
use horadam::{Params, Word};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_params(max_n: usize) -> impl Strategy<Value = Params> {
    (1u32..=4, 1u32..=4, 0..=max_n).prop_map(|(a, b, n)| Params::new(a, b, n).unwrap())
}

fn params_and_word(max_n: usize) -> impl Strategy<Value = (Params, Word)> {
    small_params(max_n).prop_flat_map(|p| {
        let words = enumerate_words(&p).unwrap();
        (Just(p), proptest::sample::select(words))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_count(p in small_params(7)) {
        let words = enumerate_words(&p).unwrap();
        prop_assert_eq!(BigUint::from(words.len()), vertex_count(&p));
        prop_assert!(words.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(words.iter().all(|w| is_valid_word(w.letters(), &p)));
    }

    #[test]
    fn blocks_concatenate_back((p, w) in params_and_word(7)) {
        let blocks = decompose_blocks(&w, &p).unwrap();
        let joined: Vec<u8> = blocks.iter().flat_map(|b| b.letters()).collect();
        prop_assert_eq!(joined, w.0);
    }

    #[test]
    fn invalid_mutations_are_rejected((p, w) in params_and_word(6), pos in 0usize..6, bump in 0u8..3) {
        prop_assume!(p.n > 0);
        let pos = pos % p.n;
        let mut out_of_range = w.0.clone();
        out_of_range[pos] = p.top_letter() + 1 + bump;
        prop_assert!(!is_valid_word(&out_of_range, &p));
        // a block letter after a non-zero letter
        if pos > 0 && w.0[pos - 1] != 0 {
            let mut orphan = w.0.clone();
            orphan[pos] = p.a as u8 + bump % p.b as u8;
            prop_assert!(!is_valid_word(&orphan, &p));
        }
    }

    #[test]
    fn counting_routes_agree(a in 1u32..=6, b in 1u32..=6, n in 0usize..=30) {
        let p = Params::new(a, b, n).unwrap();
        prop_assert_eq!(vertex_count(&p), vertex_count_closed(&p));
        let e = edge_count(&p);
        prop_assert_eq!(&e, &edge_count_convolution(&p));
        prop_assert_eq!(&e, &edge_count_binomial(&p));
        let cubes = cube_coefficients(&p);
        prop_assert_eq!(cubes.get(0), vertex_count(&p));
        prop_assert_eq!(cubes.get(1), e);
    }

    #[test]
    fn degree_rows_sum_and_handshake(a in 1u32..=5, b in 1u32..=5, n in 0usize..=14) {
        let p = Params::new(a, b, n).unwrap();
        let table = degree_table(&p).unwrap();
        prop_assert_eq!(table.total(), vertex_count(&p));
        let weighted: BigUint = table.nonzero().into_iter().map(|(k, c)| c * k).sum();
        prop_assert_eq!(weighted, edge_count(&p) * 2u32);
    }

    #[test]
    fn neighbors_are_adjacent_and_recolored((p, w) in params_and_word(7)) {
        for nb in neighbor_words(&w, &p) {
            prop_assert!(is_valid_word(nb.letters(), &p));
            prop_assert!(adjacent(&w, &nb).unwrap());
            prop_assert_ne!(color_of(&w), color_of(&nb));
        }
    }

    #[test]
    fn distance_bounds_letter_gap(p in small_params(6), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let g = build_graph(&p).unwrap();
        let (u, v) = (i.index(g.order()), j.index(g.order()));
        let d = bfs_distances(&g, u).unwrap()[v];
        let gap: u32 = g.vertex(u).letters().iter().zip(g.vertex(v).letters())
            .map(|(x, y)| x.abs_diff(*y) as u32)
            .sum();
        prop_assert!(d >= gap);
    }

    #[test]
    fn sigma_preserves_and_reflects_adjacency((p, u) in params_and_word(6), other in any::<prop::sample::Index>()) {
        let words = enumerate_words(&p).unwrap();
        let v = &words[other.index(words.len())];
        let (su, sv) = (sigma_embed(&u, &p).unwrap(), sigma_embed(v, &p).unwrap());
        prop_assert_eq!(su.len(), (p.a + p.b - 1) as usize * p.n);
        prop_assert_eq!(su.hamming(&sv) == 1, adjacent(&u, v).unwrap());
        prop_assert_eq!(su == sv, &u == v);
    }

    #[test]
    fn median_lies_on_all_geodesics(p in small_params(5), picks in proptest::array::uniform3(any::<prop::sample::Index>())) {
        let g = build_graph(&p).unwrap();
        let [x, y, z] = picks.map(|i| i.index(g.order()));
        let m = median_of_triple(g.vertex(x), g.vertex(y), g.vertex(z), &p).unwrap();
        let m = g.index_of(&m).unwrap();
        let dist = |s: usize| bfs_distances(&g, s).unwrap();
        let (dx, dy, dz) = (dist(x), dist(y), dist(z));
        prop_assert_eq!(dx[m] + dy[m], dx[y]);
        prop_assert_eq!(dx[m] + dz[m], dx[z]);
        prop_assert_eq!(dy[m] + dz[m], dy[z]);
    }

    #[test]
    fn rho_images_are_fibonacci_strings((p, w) in params_and_word(7)) {
        let r = rho_project(&w, &p);
        prop_assert!(r.windows(2).all(|x| x != [1, 1]));
        prop_assert!(r.first().is_none_or(|&x| x == 0));
    }

    #[test]
    fn paths_are_deterministic(p in small_params(6)) {
        prop_assume!(p.n > 0);
        let g = build_graph(&p).unwrap();
        prop_assert_eq!(hamiltonian_path(&g).unwrap(), hamiltonian_path(&g).unwrap());
    }

    #[test]
    fn series_division_inverts_product(
        num in proptest::collection::vec(-5i64..=5, 1..6),
        den_tail in proptest::collection::vec(-5i64..=5, 0..4),
    ) {
        let order = 10;
        let mut den_terms = vec![1];
        den_terms.extend(den_tail);
        let (n, d) = (Series::univariate(&num, order), Series::univariate(&den_terms, order));
        let q = expand_rational_series(&n.mul(&d), &d, Order::new(order, 0)).unwrap();
        prop_assert_eq!(q, n);
    }
}
