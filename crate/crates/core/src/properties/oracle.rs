use num_integer::Integer;

use super::PropertyReport;
use crate::graph::FamilySpec;
use crate::homology::FieldSpec;

/// The property values predicted for a family instance by its closed-form
/// classification, with no computation on the graph itself.
pub fn classification_oracle(f: &FamilySpec) -> PropertyReport {
    match *f {
        FamilySpec::H1 { n, j } => {
            let d = n.gcd(&j);
            let k = n / d;
            let coprime = d == 1;
            PropertyReport {
                field: FieldSpec::Rationals,
                alpha: if k <= 3 { k } else { 2 },
                nu: if k == 4 { 2 } else { 1 },
                well_covered: true,
                cohen_macaulay: coprime,
                buchsbaum: true,
                vertex_decomposable: coprime,
                shellable: coprime,
                sequentially_cm: coprime,
                s2: coprime,
                reg: crate::formulas::reg_h1(n, j),
                pd: if coprime { n - 2 } else { n - 1 },
            }
        }
        FamilySpec::H2 { l, m } => {
            let good = if l == 1 { m == 3 || m == 5 } else { m == 3 };
            let s2 = if l == 1 {
                matches!(m, 3 | 5 | 7)
            } else {
                m == 3
            };
            let wc = matches!(m, 3 | 4 | 5 | 7);
            PropertyReport {
                field: FieldSpec::Rationals,
                alpha: m / 2,
                nu: m / 3,
                well_covered: wc,
                cohen_macaulay: good,
                buchsbaum: wc,
                vertex_decomposable: good,
                shellable: good,
                sequentially_cm: good,
                s2,
                reg: (m + 1) / 3,
                pd: if l == 1 { (2 * m + 1) / 3 } else { l * m - 1 },
            }
        }
        FamilySpec::H3 { l, m } => PropertyReport {
            field: FieldSpec::Rationals,
            alpha: m,
            nu: 1,
            well_covered: true,
            cohen_macaulay: false,
            buchsbaum: true,
            vertex_decomposable: false,
            shellable: false,
            sequentially_cm: false,
            s2: false,
            reg: 1,
            pd: l * m - 1,
        },
    }
}
