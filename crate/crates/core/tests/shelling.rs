use facecycle::shelling::{line_shelling, shelling_for_facet, verify_shelling_necessary};
use facecycle::{families, Polytope};

fn check(points: Vec<facecycle::Point>, seeds: u64) {
    let p = Polytope::from_points(points).unwrap();
    for seed in 0..seeds {
        let s = line_shelling(p.lattice(), p.points().unwrap(), seed).unwrap();
        assert!(s.is_valid());
        assert_eq!(s.order.len(), p.lattice().facets().len());
        let again = verify_shelling_necessary(p.lattice(), &s.order).unwrap();
        assert_eq!(again, s.reports);
    }
}

#[test]
fn families_shell_for_five_seeds() {
    check(families::simplex(4), 5);
    check(families::cube(4), 5);
    check(families::cross_polytope(4), 5);
    check(families::cyclic(8, 4), 5);
    check(families::prism(7), 5);
    check(families::random_sphere(4, 10, 2).unwrap(), 5);
}

#[test]
fn five_cube() {
    check(families::cube(5), 1);
}

#[test]
fn facets_shell_as_lower_dimensional_polytopes() {
    let p = Polytope::from_points(families::cross_polytope(4)).unwrap();
    for facet in 0..p.lattice().facets().len() {
        let (fp, s) = shelling_for_facet(p.lattice(), p.points().unwrap(), facet, 9).unwrap();
        assert_eq!(fp.lattice.dim(), 3);
        assert_eq!(fp.lattice.f_vector(), vec![4, 6, 4]);
        assert!(s.is_valid());
    }
}
