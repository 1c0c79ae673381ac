use toric_bricks::brick::GBrick;
use toric_bricks::fixtures::{self, g20, g39};
use toric_bricks::io::{self, Document};
use toric_bricks::pipeline::{build_brickset, end_to_end, Strategy};
use toric_bricks::{GroupType, LatticePoint, Monomial, RoundDownContext, Theta, Q};

const AUTO: [Strategy; 3] = [Strategy::Auto, Strategy::Auto, Strategy::Auto];

fn round_trip(doc: &Document) {
    let text = io::serialize(doc);
    let back = io::parse(&text).unwrap();
    assert_eq!(&back, doc);
    assert_eq!(io::serialize(&back), text);
}

#[test]
fn fixture_corpus_round_trips() {
    let fans = [fixtures::fig3(), fixtures::fig4(), fixtures::model_y(), fixtures::model_z(), fixtures::x_can_39().unwrap()];
    for f in &fans {
        let doc = io::fan_doc(f);
        round_trip(&doc);
        assert_eq!(&io::fan_from(doc).unwrap(), f);
    }
    let builds = [
        build_brickset(&g20(), &fixtures::fig4(), &LatticePoint([1, 3, 4]), &AUTO).unwrap(),
        build_brickset(&g39(), &fixtures::model_y(), &LatticePoint([1, 5, 11]), &AUTO).unwrap(),
        build_brickset(&g39(), &fixtures::model_z(), &fixtures::center_u(), &AUTO).unwrap(),
    ];
    for node in &builds {
        let doc = io::brickset_doc(&node.brickset);
        round_trip(&doc);
        assert_eq!(io::brickset_from(doc).unwrap(), node.brickset);
        for b in node.brickset.bricks() {
            let doc = io::brick_doc(&b, None);
            round_trip(&doc);
            assert_eq!(io::brick_from(doc).unwrap().0, b);
        }
    }
    let vt: Theta = fixtures::z_vartheta().unwrap();
    round_trip(&io::theta_doc(&vt));
    round_trip(&io::group_doc(&g39()));
    round_trip(&io::error_doc(4, "bad input"));
    round_trip(&io::report_doc("model", true, serde_json::json!({ "cones": 8 })));
}

#[test]
fn certificate_documents_are_deterministic() {
    let run = end_to_end(&g20(), &fixtures::fig4()).unwrap();
    let cert = run.outcome.unwrap();
    let doc = io::certificate_doc(&cert.tag.family.to_string(), &cert.certificate);
    round_trip(&doc);
    let again = end_to_end(&g20(), &fixtures::fig4()).unwrap().outcome.unwrap();
    assert_eq!(io::serialize(&io::certificate_doc(&again.tag.family.to_string(), &again.certificate)), io::serialize(&doc));
    let Document::Certificate(c) = doc else { unreachable!() };
    let split = c.root.split.expect("split root");
    assert_eq!(split.m, 2);
    assert_eq!(split.margins.len(), 8);
    assert!(split.margins.iter().all(|m| m.threshold <= 2));
}

#[test]
fn gamma_prime_one_document() {
    let ctx = RoundDownContext::new(&g20(), &LatticePoint([1, 3, 4]), 1).unwrap();
    let g3 = GroupType::new(3, [1, 1, 1]).unwrap();
    assert_eq!(ctx.subgroup(), &g3);
    let zeta = Monomial::var(2);
    let b = GBrick::from_transversal(&g3, &[Monomial::one(), zeta, zeta.pow(2)]).unwrap();
    let doc = io::brick_doc(&b, Some(&ctx));
    let Document::Brick(d) = &doc else { unreachable!() };
    assert_eq!(d.monomials, vec![[0, 0, 0], [0, 0, 1], [0, 0, 2]]);
    assert_eq!(d.context.as_ref().map(|c| c.k), Some(2));
    round_trip(&doc);
}

#[test]
fn theta_p_document() {
    let mut v = vec![0i64; 20];
    v[0] = -3;
    v[5..8].fill(1);
    let t = Theta::from_ints(&v).unwrap();
    let Document::Theta(d) = io::theta_doc(&t) else { unreachable!() };
    let mut want: Vec<&str> = vec!["-3", "0", "0", "0", "0", "1", "1", "1"];
    want.resize(20, "0");
    assert_eq!(d.values, want);
    let half = t.scale(&Q::new(1.into(), 2.into()));
    let Document::Theta(d) = io::theta_doc(&half) else { unreachable!() };
    assert_eq!(d.values[0], "-3/2");
}

#[test]
fn strict_parsing() {
    for bad in [
        r#"{"kind":"group","r":20,"weights":[1,3,4],"note":"x"}"#,
        r#"{"kind":"spline","r":20}"#,
        r#"{"kind":"theta","r":3,"values":["1","1","1"]}"#,
        r#"{"kind":"theta","r":3,"values":["1/0","0","0"]}"#,
        r#"{"kind":"theta","r":2,"values":["1","-1","0"]}"#,
        r#"{"kind":"fan","group":{"r":3,"weights":[1,1,1]},"rays":[[3,0,0]],"cones":[[0,1,2]]}"#,
        r#"{"kind":"brick","group":{"r":3,"weights":[1,1,1]},"monomials":[[0,0,0],[0,0,2],[0,0,1]]}"#,
    ] {
        assert!(io::parse(bad).and_then(|d| match d {
            Document::Theta(_) => io::theta_from::<Q>(d).map(|_| ()),
            Document::Fan(_) => io::fan_from(d).map(|_| ()),
            Document::Brick(_) => io::brick_from(d).map(|_| ()),
            _ => Ok(()),
        })
        .is_err(), "{bad}");
    }
}
