use lefschetz_core::hurwitz::{apply_move, w0, FiberCounts, HurwitzSystem, MoveKind};
use lefschetz_core::mcg::Genus;
use lefschetz_core::stabilizer::{normal_form, search_equivalence, verify_certificate, SearchOptions, StabError};
use proptest::prelude::*;

fn counts_strategy() -> impl Strategy<Value = (Genus, FiberCounts)> {
    (1u32..=6).prop_flat_map(|g| {
        let k = (g / 2) as usize;
        (
            Just(Genus::new(g).unwrap()),
            0u64..400,
            0u64..40,
            prop::collection::vec(0u64..6, k),
            prop::collection::vec(0u64..6, k),
        )
            .prop_map(|(genus, p, m, hp, hm)| {
                let mut c = FiberCounts::zero(genus);
                c.n0_plus = p;
                c.n0_minus = m;
                c.nh_plus = hp.iter().zip(&hm).map(|(a, b)| a + b).collect();
                c.nh_minus = hm;
                (genus, c)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_solves_the_count_equation((genus, c) in counts_strategy()) {
        let g = genus.get() as i64;
        match normal_form(&c, genus) {
            Ok(nf) => {
                prop_assert!(!nf.b_options.is_empty());
                for o in &nf.b_options {
                    prop_assert_eq!(4 * (2 * g + 1) * o.a + 2 * (g + 1) * (2 * g + 1) * o.b as i64, nf.e);
                }
                if g % 2 == 0 {
                    prop_assert_eq!(nf.b_options.len(), 1);
                    let q = nf.e / (2 * (2 * g + 1));
                    prop_assert_eq!(nf.b_options[0].b as i64, q.rem_euclid(2));
                } else {
                    prop_assert_eq!(nf.b_options.len(), 2);
                }
                prop_assert_eq!(nf.d, c.n0_minus);
            }
            Err(StabError::Divisibility { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn search_certificates_verify(picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let genus = Genus::new(1).unwrap();
        let start = w0(genus).fiber_sum(&HurwitzSystem::from_zetas(genus, &[1, 3, 2]).unwrap()).unwrap();
        let mut s = start.clone();
        for p in picks {
            let n = s.len();
            let cands: Vec<MoveKind> = (0..n)
                .flat_map(|pos| {
                    let z = |k: usize| s.entries().get(pos + k).and_then(|e| e.as_plain_zeta()).unwrap_or(0);
                    [
                        MoveKind::H1 { pos, i: z(0), j: z(1) },
                        MoveKind::H2 { pos, i: z(0), j: z(1) },
                        MoveKind::H3 { pos },
                        MoveKind::H3inv { pos },
                    ]
                })
                .filter(|m| apply_move(&s, m).is_ok())
                .collect();
            if cands.is_empty() { break; }
            s = apply_move(&s, p.get(&cands)).unwrap();
        }
        let out = search_equivalence(&start, &s, SearchOptions { budget: 100_000, cyclic: false });
        let c = out.certificate.expect("reachable by construction");
        prop_assert!(verify_certificate(&c).ok);
    }
}
