//! The same pipeline instantiated at single precision.

use rectflow::{
    build_frame, cross_section_area, cylinder_surface, locus, sample_solution, Branch, Config32, CylinderSurface,
    LocusKind, Pair,
};

#[test]
fn fixture_s_in_single_precision() {
    let cfg = Config32::new(0.0, -1.0, 0.0, 1.0, -1.0).unwrap();
    let f = build_frame(&cfg, 1e-5).unwrap();
    assert!((f.lambda - 0.5).abs() < 1e-6);
    assert!(f.degenerate);
    let t = f.t.scaled(10f32.sqrt());
    let want = [(2.0, -1.0), (2.0, 1.0), (1.0, 1.0), (1.0, -1.0)];
    for (v, (x, y)) in t.vertices.iter().zip(want) {
        assert!((v.x - x).abs() < 1e-5 && (v.y - y).abs() < 1e-5);
    }
    for s in sample_solution(&f, 64, Branch::Plus) {
        assert!((s.coords.norm() - 1.0).abs() < 1e-5);
    }
    assert_eq!(locus(&cfg, &f, 1e-5).kind, LocusKind::LinePair);
    match cylinder_surface(&cfg, Pair::BD) {
        CylinderSurface::Elliptic(q) => {
            let a = cross_section_area(&q).unwrap();
            assert!((a - std::f32::consts::PI / 8.0).abs() < 1e-6);
        }
        CylinderSurface::Flat(_) => panic!(),
    }
}
