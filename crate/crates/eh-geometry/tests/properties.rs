use eh_geometry::{eh_metric, BiaxialPoint, BundlePoint, EhParams};
use forms_core::ChartPoint;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = ChartPoint> {
    prop::array::uniform4(-3.0f64..3.0)
        .prop_filter("away from the origin", |c| c.iter().map(|x| x * x).sum::<f64>() > 1e-2)
        .prop_map(|c| ChartPoint::from_parts(&[(c[0], c[1]), (c[2], c[3])]).unwrap())
}

proptest! {
    #[test]
    fn f_times_inverse_is_one(kappa in 0.01f64..50.0, s in 1e-3f64..1e3) {
        let pr = EhParams::new(kappa).unwrap().profiles();
        let big = pr.big_f(s).unwrap();
        let prod = pr.small_f(s).unwrap() * (big - kappa.sqrt() / s);
        prop_assert!((prod - 1.0).abs() < 1e-9);
        prop_assert!(big > 1.0);
    }

    #[test]
    fn metric_has_unit_determinant(kappa in 0.05f64..20.0, p in point()) {
        let g = eh_metric(EhParams::new(kappa).unwrap());
        prop_assert!(g.det_residual(&p) < 1e-9);
    }

    #[test]
    fn charts_round_trip(kappa in 0.05f64..20.0, p in point()) {
        let pa = EhParams::new(kappa).unwrap();
        let up_to_sign = |q: &ChartPoint| {
            let d = |sign: f64| (0..2).map(|i| (p.coord(i) - sign * q.coord(i)).norm()).fold(0.0, f64::max);
            d(1.0).min(d(-1.0))
        };
        // exact branch-cut points are rejected rather than mapped
        let Ok(q) = BundlePoint::from_z(&p).and_then(|b| b.to_z()) else { return Ok(()) };
        prop_assert!(up_to_sign(&q) < 1e-10);
        let Ok(r) = BiaxialPoint::from_z(pa, &p).and_then(|b| b.to_z(pa)) else { return Ok(()) };
        prop_assert!(up_to_sign(&r) < 1e-9 * (1.0 + p.s()));
    }
}
