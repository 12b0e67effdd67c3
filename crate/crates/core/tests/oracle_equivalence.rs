use circbetti::betti::{betti_hochster, BettiTable};
use circbetti::complex::independence_complex;
use circbetti::formulas::{
    betti_d_fold_join_cycle_complement, betti_family, betti_h1, betti_h2, betti_multipartite,
};
use circbetti::graph::{family_graph, FamilySpec, Graph};
use circbetti::homology::{reduced_homology_dims, FieldSpec};

const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::Prime(2)];

fn instances(max_n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        out.extend((1..=n / 2).map(|j| FamilySpec::H1 { n, j }));
    }
    for l in 1..=max_n / 3 {
        out.extend((3..=max_n / l).map(|m| FamilySpec::H2 { l, m }));
    }
    for l in 2..=max_n / 2 {
        out.extend((2..=max_n / l).map(|m| FamilySpec::H3 { l, m }));
    }
    out
}

fn oracle(f: &FamilySpec, field: FieldSpec) -> BettiTable {
    betti_hochster(&family_graph(f).unwrap(), field).unwrap()
}

#[test]
fn closed_forms_match_hochster_up_to_sixteen_vertices() {
    for f in instances(16) {
        let formula = betti_family(&f).unwrap();
        for field in FIELDS {
            assert_eq!(formula, oracle(&f, field), "{f} over {field}");
        }
    }
}

#[test]
fn three_copies_of_the_hexagon() {
    let f = FamilySpec::H2 { l: 3, m: 6 };
    for field in FIELDS {
        assert_eq!(betti_h2(3, 6).unwrap(), oracle(&f, field));
    }
}

#[test]
fn regularity_and_projective_dimension_laws() {
    for l in 1..=5 {
        for m in (5..=20).filter(|m| l * m <= 64) {
            assert_eq!(
                betti_h2(l, m).unwrap().regularity(),
                (m + 1) / 3,
                "H2({l},{m})"
            );
        }
    }
    for parts in [vec![2, 3], vec![1, 1, 1], vec![4, 4, 4, 4], vec![7, 1, 2]] {
        let t = betti_multipartite(&parts).unwrap();
        assert_eq!(t.proj_dim(), parts.iter().sum::<usize>() - 1);
        assert_eq!(t.regularity(), 1);
    }
}

#[test]
fn d_fold_joins_agree_with_h1() {
    for n in 5..=30 {
        for j in 1..=n / 2 {
            let d = num_gcd(n, j);
            if d >= 2 {
                assert_eq!(
                    betti_h1(n, j).unwrap(),
                    betti_d_fold_join_cycle_complement(d, n / d).unwrap()
                );
            }
        }
    }
}

#[test]
fn divisions_stay_exact_at_larger_sizes() {
    for n in 5..=60 {
        for j in 1..=n / 2 {
            betti_h1(n, j).unwrap();
        }
    }
    for l in 1..=6 {
        for m in (5..=30).filter(|m| l * m <= 64) {
            betti_h2(l, m).unwrap();
        }
    }
}

#[test]
fn homology_does_not_depend_on_the_characteristic() {
    let primes = [
        FieldSpec::Prime(2),
        FieldSpec::Prime(3),
        FieldSpec::Prime(5),
    ];
    for f in instances(16) {
        let c = independence_complex(&family_graph(&f).unwrap());
        let q = reduced_homology_dims(&c, FieldSpec::Rationals);
        for p in primes {
            assert_eq!(reduced_homology_dims(&c, p), q, "{f} over {p}");
        }
    }
}

#[test]
fn tables_respect_quadratic_generation() {
    for g in [
        Graph::cycle(12).unwrap(),
        Graph::path(11).unwrap(),
        Graph::cycle_complement(10).unwrap(),
    ] {
        let t = betti_hochster(&g, FieldSpec::Rationals).unwrap();
        assert!(t.entries().all(|(i, d, _)| d <= 2 * i));
        assert_eq!(t.get_u64(1, 2), g.edge_count() as u64);
    }
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}
