use proptest::prelude::*;

use toric_bricks::brick::GBrick;
use toric_bricks::fixtures::g20;
use toric_bricks::hilbert::{hilbert_basis, in_dual};
use toric_bricks::io;
use toric_bricks::pipeline::build::contexts;
use toric_bricks::pipeline::{build_brickset, ghilb, restrict_all, Restriction, Strategy as Build};
use toric_bricks::stability::{
    find_m, min_margin, pushforward, solve_partial, theta_basis, vartheta_catalog, VarthetaFamily,
};
use toric_bricks::{fixtures, is_good_subdivision, GroupType, LatticePoint, Theta, Q};

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn groups() -> impl Strategy<Value = GroupType> {
    (2i64..=14, 0i64..14, 0i64..14, 0i64..14)
        .prop_filter_map("faithful", |(r, a, b, c)| GroupType::new(r, [a, b, c]).ok())
}

fn theta_of(r: usize, raw: &[i64]) -> Theta {
    let mut v: Vec<i64> = raw.iter().take(r).copied().collect();
    v.resize(r, 0);
    let s: i64 = v.iter().sum();
    v[0] -= s;
    Theta::from_ints(&v).unwrap()
}

fn hilb_bricks(g: &GroupType) -> Vec<GBrick> {
    ghilb(g).expect("G-Hilb").1.bricks()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn margin_scales_linearly(g in groups(), raw in prop::collection::vec(-5i64..=5, 14), k in 1i64..=7) {
        let t = theta_of(g.order() as usize, &raw);
        for b in hilb_bricks(&g) {
            let m1 = min_margin(&b, &t).unwrap();
            let mk = min_margin(&b, &t.scale(&q(k))).unwrap();
            prop_assert_eq!(m1.map(|m| m.value * q(k)), mk.map(|m| m.value));
        }
    }

    #[test]
    fn basis_pushforward(g in groups(), i in 1usize..14) {
        let r = g.order() as usize;
        prop_assume!(i < r);
        let t: Theta = theta_basis(&g, i).unwrap();
        for v in g.junior_points().into_iter().map(|(_, p)| p) {
            let Ok(ctxs) = contexts(&g, &v) else { continue };
            for ctx in ctxs {
                let push = pushforward(&ctx, &t);
                let j = ctx.induced_character(i);
                for (c, val) in push.values().iter().enumerate() {
                    let want = i64::from(c == j) - i64::from(c == 0);
                    prop_assert_eq!(val, &q(want));
                }
            }
        }
    }

    #[test]
    fn documents_round_trip(g in groups(), raw in prop::collection::vec(-9i64..=9, 14), d in 1i64..=6) {
        let (fan, set) = ghilb(&g).unwrap();
        let text = io::serialize(&io::fan_doc(&fan));
        prop_assert_eq!(io::fan_from(io::parse(&text).unwrap()).unwrap(), fan);
        let text = io::serialize(&io::brickset_doc(&set));
        prop_assert_eq!(io::serialize(&io::brickset_doc(&io::brickset_from(io::parse(&text).unwrap()).unwrap())), text);
        let t = theta_of(g.order() as usize, &raw).scale(&Q::new(1.into(), d.into()));
        let text = io::serialize(&io::theta_doc(&t));
        prop_assert_eq!(io::theta_from::<Q>(io::parse(&text).unwrap()).unwrap(), t);
    }

    #[test]
    fn hilbert_basis_is_minimal(g in groups()) {
        let (fan, _) = ghilb(&g).unwrap();
        for c in fan.cones() {
            let hb = hilbert_basis(&g, &c).unwrap();
            for m in &hb {
                prop_assert!(in_dual(&c, m) && g.is_invariant(m));
                // Irreducible: m minus another basis element leaves the semigroup.
                for n in hb.iter().filter(|n| *n != m) {
                    let rest = *m / *n;
                    prop_assert!(rest.is_one() || !in_dual(&c, &rest) || !g.is_invariant(&rest));
                }
            }
        }
    }

    #[test]
    fn stable_from_m_on(t2 in prop::collection::vec(1i64..=4, 2), t3 in prop::collection::vec(1i64..=4, 3)) {
        let g = g20();
        let v = LatticePoint([1, 3, 4]);
        let ctxs = contexts(&g, &v).unwrap();
        // Positive off the trivial character, so the G_k-Hilb sub-bricks stay stable.
        let lift = |t: &[i64]| theta_of(t.len() + 1, &[vec![0], t.to_vec()].concat());
        let targets = vec![Theta::zero(1), lift(&t2), lift(&t3)];
        let sol = solve_partial(&g, &ctxs, &targets).unwrap();
        prop_assert!(sol.surjective());
        let theta_p = sol.theta.unwrap();
        let vt: Theta = vartheta_catalog(&VarthetaFamily::Case1 { a: 3, b: 4, c: 1 }).unwrap();
        let node = build_brickset(&g, &fixtures::fig4(), &v, &[Build::Auto, Build::Auto, Build::Auto]).unwrap();
        let bricks = node.brickset.bricks();
        let cert = find_m(&bricks, &theta_p, &vt, 1 << 20).unwrap();
        let cert = cert.expect("a stabilizing m exists");
        let stable_at = |m: u64| bricks.iter().all(|b| {
            min_margin(b, &theta_p.combine(&q(m as i64), &vt)).unwrap().is_none_or(|x| x.is_stable())
        });
        for m in [cert.m, cert.m + 1, cert.m + 7] {
            prop_assert!(stable_at(m), "unstable at m = {}", m);
        }
        if cert.m > 0 {
            prop_assert!(!stable_at(cert.m - 1));
        }
    }
}

#[test]
fn recursion_centers_either_restrict_or_straddle() {
    for (g, fan) in [(g20(), fixtures::fig4()), (fixtures::g39(), fixtures::model_y()), (fixtures::g39(), fixtures::model_z())] {
        for v in fan.rays().iter().filter(|p| !g.axes().contains(p)) {
            if !is_good_subdivision(&g, v).good {
                continue;
            }
            match restrict_all(&fan, v).unwrap() {
                Restriction::Fans(fs) => {
                    let total: usize = fs.iter().map(|f| f.len()).sum();
                    assert_eq!(total, fan.len(), "cones lost restricting {} at {v:?}", g);
                }
                Restriction::Straddling(cs) => assert!(!cs.is_empty()),
            }
        }
    }
}
