mod common;

use std::f64::consts::PI;

use common::strategies;
use proptest::prelude::*;
use rectflow::models::{
    cone_point_to_cylinder, cylinder_point_to_cone, locus_conic, shared_center_count, CenterPoint, Space,
};
use rectflow::{
    build_frame, center_map, center_map_matrix, cone_surface, cross_section_area, cylinder_principal_axes,
    cylinder_surface, invert_center_map, projective_swap, sample_solution, Branch, CenterPreimage, Config64,
    CylinderSurface, Label, Pair, Parallelogram64, Quadric, Vec2, Vec3,
};

fn elliptic(cfg: &Config64, pair: Pair) -> Quadric<f64> {
    match cylinder_surface(cfg, pair) {
        CylinderSurface::Elliptic(q) => q,
        CylinderSurface::Flat(_) => panic!("parallel pair"),
    }
}

fn strict() -> impl Strategy<Value = Config64> {
    strategies::config().prop_filter("parallel pair", |c| !c.any_parallel(1e-9))
}

/// Intersection of the pair's lines at scale 1, by direct elimination.
fn pair_point(cfg: &Config64, pair: Pair) -> Vec2<f64> {
    let (p, q) = match pair {
        Pair::AC => (Label::A, Label::C),
        Pair::BD => (Label::B, Label::D),
    };
    let x = (cfg.intercept(q) - cfg.intercept(p)) / (cfg.slope(p) - cfg.slope(q));
    Vec2::new(x, cfg.slope(p) * x + cfg.intercept(p))
}

proptest! {
    #![proptest_config(common::cases(1000))]

    #[test]
    fn center_map_is_linear(cfg in strategies::any_config(), a in (-5.0..5.0f64, -5.0..5.0f64, -2.0..2.0f64),
                            b in (-5.0..5.0f64, -5.0..5.0f64, -2.0..2.0f64), s in -3.0..3.0f64, t in -3.0..3.0f64) {
        let p = Parallelogram64::from_params(&cfg, a.0, a.1, a.2).unwrap();
        let q = Parallelogram64::from_params(&cfg, b.0, b.1, b.2).unwrap();
        let lhs = center_map(&p.scaled(s).add(&q.scaled(t))).as_vec();
        let rhs = center_map(&p).as_vec() * s + center_map(&q).as_vec() * t;
        let size = 1.0 + lhs.norm();
        prop_assert!((lhs - rhs).max_abs() <= 1e-10 * size);
    }

    #[test]
    fn unit_centers_lie_on_both_cylinders(cfg in strict()) {
        let f = build_frame(&cfg, 1e-9).unwrap();
        let (ac, bd) = (elliptic(&cfg, Pair::AC), elliptic(&cfg, Pair::BD));
        for s in sample_solution(&f, 64, Branch::Plus) {
            let c = center_map(&s.rect).as_vec();
            prop_assert!(ac.residual(c).abs() <= 1e-8, "{}", ac.residual(c));
            prop_assert!(bd.residual(c).abs() <= 1e-8, "{}", bd.residual(c));
        }
    }

    #[test]
    fn cylinder_axes_point_at_the_pair_intersection(cfg in strict()) {
        for pair in [Pair::AC, Pair::BD] {
            let ax = cylinder_principal_axes(&elliptic(&cfg, pair)).unwrap();
            let p = pair_point(&cfg, pair);
            prop_assert!(ax.axis_direction.line_angle(Vec3::new(p.x, p.y, 1.0)) <= 1e-8);
        }
    }

    #[test]
    fn cross_sections_have_area_pi_over_8(cfg in strict()) {
        for pair in [Pair::AC, Pair::BD] {
            let area = cross_section_area(&elliptic(&cfg, pair)).unwrap();
            prop_assert!((area / (PI / 8.0) - 1.0).abs() <= 1e-9, "{}", area);
        }
    }

    #[test]
    fn conic_contains_projected_centers(cfg in strict()) {
        let f = build_frame(&cfg, 1e-9).unwrap();
        let conic = locus_conic(&cfg).unwrap();
        for s in sample_solution(&f, 64, Branch::Plus) {
            let c = center_map(&s.rect);
            // the homogeneous point (cx, cy, w) is the center at scale 1
            prop_assert!(conic.residual_homogeneous(c.as_vec()).abs() <= 1e-7);
        }
    }

    #[test]
    fn swap_is_an_involution(p in proptest::array::uniform4(-1e3..1e3f64)) {
        prop_assume!(p.iter().any(|c| *c != 0.0));
        prop_assert_eq!(projective_swap(projective_swap(p).unwrap()).unwrap(), p);
    }

    #[test]
    fn cone_points_swap_onto_the_cylinder(cfg in strict(), x in -5.0..5.0f64, y in -5.0..5.0f64, up in any::<bool>()) {
        for pair in [Pair::AC, Pair::BD] {
            let cone = cone_surface(&cfg, pair).unwrap();
            let h = Vec3::new(x, y, 1.0);
            let z = cone.q.quad(h).sqrt() * if up { 1.0 } else { -1.0 };
            prop_assume!(z.abs() > 1e-6);
            let k = Vec3::new(x, y, z);
            prop_assert_eq!(cone.space, Space::Xyz);
            prop_assert!(cone.residual(k).abs() <= 1e-9 * (1.0 + z * z));
            let p = cone_point_to_cylinder(k).unwrap();
            let cyl = elliptic(&cfg, pair);
            prop_assert!(cyl.residual(p).abs() <= 1e-9, "{}", cyl.residual(p));
            let back = cylinder_point_to_cone(p).unwrap();
            prop_assert!((back - k).norm() <= 1e-9 * (1.0 + k.norm()));
        }
    }

    #[test]
    fn center_map_inverts_without_parallel_pairs(cfg in strict(), a in (-5.0..5.0f64, -5.0..5.0f64, -2.0..2.0f64)) {
        let f = build_frame(&cfg, 1e-9).unwrap();
        let p = Parallelogram64::from_params(&cfg, a.0, a.1, a.2).unwrap();
        match invert_center_map(&f, center_map(&p), 1e-9).unwrap() {
            CenterPreimage::Unique(back) => {
                let size = 1.0 + p.vertices.iter().fold(p.w.abs(), |m, v| m.max(v.norm()));
                prop_assert!(back.max_abs_diff(&p) <= 1e-9 * size);
            }
            CenterPreimage::Image(_) => prop_assert!(false, "singular center map"),
        }
    }

    #[test]
    fn center_map_is_singular_with_parallel_pairs(cfg in strategies::parallel_config()) {
        let f = build_frame(&cfg, 1e-9).unwrap();
        let m = center_map_matrix(&f);
        let cols = [m.col(0).norm(), m.col(1).norm(), m.col(2).norm()];
        let s = cols.iter().fold(0.0f64, |a, b| a.max(*b));
        prop_assert!(m.det().abs() <= 1e-9 * s * s * s);
        let c = center_map(&f.t);
        prop_assert!(matches!(invert_center_map(&f, c, 1e-9), Ok(CenterPreimage::Image(_))));
    }

    #[test]
    fn shared_centers_are_bounded(cfg in strategies::any_config()) {
        let f = build_frame(&cfg, 1e-9).unwrap();
        let both = cfg.m_a == cfg.m_c && cfg.m_b == cfg.m_d;
        let bound = if both { 4 } else { 2 };
        for s in sample_solution(&f, 16, Branch::Plus) {
            prop_assert!(shared_center_count(&f, s.coords, 1e-9) <= bound);
        }
    }
}

#[test]
fn center_points_round_trip_through_vectors() {
    let c = CenterPoint::new(1.0, -2.0, 0.5);
    assert_eq!(CenterPoint::from_vec(c.as_vec()), c);
}
