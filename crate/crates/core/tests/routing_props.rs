use orthostair::gen::{random_carve_instance, random_convex_polygon, random_exterior_point, random_obstacles, random_point};
use orthostair::grid::Cell;
use orthostair::routing::{carve_check, escape_dirs, path_avoids, rasterize_free_space, route_around_convex, route_multi, RoutingScene};
use orthostair::{ratio, Axis, Point, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn single_obstacle_routes_use_at_most_four_links(seed in any::<u64>()) {
        let mut r = rng(seed);
        let poly = random_convex_polygon(&mut r, 12, 100).unwrap();
        for _ in 0..10 {
            let p = random_exterior_point(&mut r, &poly, 20).unwrap();
            let q = random_exterior_point(&mut r, &poly, 20).unwrap();
            if p == q {
                continue;
            }
            let route = route_around_convex(&p, &q, &poly).unwrap();
            prop_assert!(route.verified);
            prop_assert!(route.links <= 4);
            prop_assert_eq!(route.links, route.path.link_count());
            prop_assert!(path_avoids(&route.path, std::slice::from_ref(&poly)));
            prop_assert_eq!(route.path.start(), &p);
            prop_assert_eq!(route.path.end(), &q);
        }
    }

    #[test]
    fn exterior_points_escape_on_both_axes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let poly = random_convex_polygon(&mut r, 12, 100).unwrap();
        for _ in 0..20 {
            let p = random_exterior_point(&mut r, &poly, 20).unwrap();
            let dirs = escape_dirs(&p, &poly).unwrap();
            prop_assert!(dirs.iter().any(|d| d.axis() == Axis::Horizontal));
            prop_assert!(dirs.iter().any(|d| d.axis() == Axis::Vertical));
        }
    }

    #[test]
    fn free_space_grid_has_small_link_distance(seed in any::<u64>()) {
        let mut r = rng(seed);
        let poly = random_convex_polygon(&mut r, 8, 6).unwrap();
        let scene = RoutingScene::with_auto_window(vec![poly], &[]).unwrap();
        let free = rasterize_free_space(&scene, &ratio(1, 1)).unwrap();
        let inner = |c: Cell| {
            c.col >= free.min_col() + 2 && c.col <= free.max_col() - 2 && c.row >= free.min_row() + 2 && c.row <= free.max_row() - 2
        };
        let cells: Vec<Cell> = free.cells().filter(|&c| inner(c)).collect();
        for _ in 0..6 {
            let a = cells[r.gen_range(0..cells.len())];
            let b = cells[r.gen_range(0..cells.len())];
            let d = free.s_distance(a, b).unwrap().expect("free space is connected");
            prop_assert!(d.links <= 4, "{:?} {:?} {}", a, b, d.links);
        }
    }

    #[test]
    fn carving_keeps_connectivity(seed in any::<u64>()) {
        let (c, k) = random_carve_instance(&mut rng(seed)).unwrap();
        let report = carve_check(&c, &k, &ratio(1, 1)).unwrap();
        prop_assert!(report.connected);
        prop_assert_eq!(report.removed + report.remaining, c.len());
    }
}

fn scene_and_queries(seed: u64) -> (RoutingScene<Rational>, Vec<(Point, Point)>) {
    let mut r = rng(seed);
    let obstacles = random_obstacles(&mut r, 5).unwrap();
    let scene = RoutingScene::with_auto_window(obstacles, &[]).unwrap();
    let draw = |r: &mut ChaCha8Rng| loop {
        let p = random_point(r, -5, 70);
        if scene.check_query_point(&p).is_ok() {
            return p;
        }
    };
    let queries = (0..3).map(|_| (draw(&mut r), draw(&mut r))).collect();
    (scene, queries)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn multi_obstacle_routes_verify(seed in any::<u64>()) {
        let (scene, queries) = scene_and_queries(seed);
        for (p, q) in queries {
            let route = route_multi(&scene, &p, &q, &ratio(2, 1)).unwrap();
            prop_assert!(route.verified && scene.verify_path(&route.path));
            let finer = route_multi(&scene, &p, &q, &ratio(1, 1)).unwrap();
            prop_assert!(finer.refinements <= route.refinements.saturating_sub(1));
            if route.refinements == 0 {
                prop_assert!(finer.links <= route.links);
            }
        }
    }
}
