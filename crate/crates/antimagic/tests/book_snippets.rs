//! Code listings for the guide in `book/`. Each chapter pulls its
//! examples from here via mdbook anchors, so every listing in the book is
//! compiled and executed by `cargo test`.

#[test]
fn quickstart() {
    // ANCHOR: quickstart
    use antimagic::generators;
    use antimagic::run_pipeline;

    // Three disjoint copies of K_5: 4-regular, 15 vertices, 30 edges.
    let k5 = generators::complete(5).unwrap();
    let g = generators::disjoint_union(&[k5.clone(), k5.clone(), k5]);

    let out = run_pipeline(g).unwrap();
    assert!(out.valid); // all 15 vertex sums are distinct
    assert!(out.proven_regime); // at least 3 odd components
    assert_eq!(out.ol.label.len(), 30); // one label per edge
                                        // ANCHOR_END: quickstart
}

#[test]
fn stages_by_hand() {
    // ANCHOR: stages
    use antimagic::euler::euler_tour;
    use antimagic::expansion::{expand, select_anchor};
    use antimagic::generators;
    use antimagic::graph::{decompose, vertex_sums};
    use antimagic::labeling::label_all;
    use antimagic::orientation::{orient, Parity};

    let g = generators::paper_family(3, 0, 2, (5, 9), 7).unwrap();
    let decomp = decompose(&g);
    assert_eq!(decomp.odd_count, 3);

    let mut cycles = Vec::new();
    for comp in &decomp.components {
        // A closed walk through every edge of the component.
        let walk = euler_tour(&g, &comp.vertices).unwrap();
        assert_eq!(walk.len(), comp.edge_indices.len());

        // Blow the walk up into one long cycle and pick the anchor
        // positions that seed the path decomposition.
        let anchor = select_anchor(&walk).unwrap();
        let cycle = expand(&walk, anchor).unwrap();
        assert_eq!(cycle.real_count(), comp.vertices.len());

        // Alternate path directions so every real vertex sends out 0 or
        // 2 arcs (1 for the lead vertex of an odd component).
        let parity = if comp.odd { Parity::Odd } else { Parity::Even };
        cycles.push(orient(cycle, parity));
    }

    // Hand out 1..=m in batches of consecutive integers.
    let labeled = label_all(cycles, &decomp, &g).unwrap();
    let report = vertex_sums(&g, &labeled.ol).unwrap();
    assert!(report.distinct);
    // ANCHOR_END: stages
}

#[test]
fn generator_menu() {
    // ANCHOR: generators
    use antimagic::generators;

    // Circulant graph: vertex v connects to v +- 1 and v +- 2 (mod 11).
    let c = generators::circulant(11, &[1, 2]).unwrap();
    assert_eq!((c.n(), c.m()), (11, 22));

    // Seed-deterministic random 4-regular graph on 10 vertices.
    let r1 = generators::random_regular(10, 4, 99).unwrap();
    let r2 = generators::random_regular(10, 4, 99).unwrap();
    assert_eq!(r1.edges(), r2.edges());

    // 3 odd + 1 even connected 4-regular components, sizes drawn
    // from 5..=13.
    let fam = generators::paper_family(3, 1, 2, (5, 13), 42).unwrap();
    assert!(fam.degree(0) == 4);
    // ANCHOR_END: generators
}

#[test]
fn verification() {
    // ANCHOR: verify
    use antimagic::generators;
    use antimagic::run_pipeline;
    use antimagic::verifier::check_antimagic;

    let g = generators::paper_family(4, 1, 3, (7, 11), 11).unwrap();
    let out = run_pipeline(g).unwrap();

    // The sum check recomputes everything from the arc list alone.
    let report = check_antimagic(&out.graph, &out.ol).unwrap();
    assert!(report.distinct);
    assert_eq!(report.sums, out.report.sums);

    // Structural diagnostics: sum separation between components, label
    // interleaving, imaginary-copy bookkeeping, outdegree pattern.
    assert!(out.diagnostics.all_pass());
    assert!(out.diagnostics.strict); // s >= 3, so every check is hard
                                     // ANCHOR_END: verify
}

#[test]
fn oracle_cross_check() {
    // ANCHOR: oracle
    use antimagic::generators;
    use antimagic::oracle::{search_orientation_and_labeling, FullSearchOutcome, SearchLimits};
    use antimagic::run_pipeline;

    // K_5 is small enough to search every orientation and labeling,
    // but its 10 edges sit above the default cap of 8, so opt in.
    let g = generators::complete(5).unwrap();
    let limits = SearchLimits {
        force: true,
        ..SearchLimits::full_default()
    };
    let full = search_orientation_and_labeling(&g, limits).unwrap();
    let FullSearchOutcome::Found { labels, .. } = full else {
        panic!("K_5 admits an antimagic orientation");
    };

    // The constructive pipeline must agree that one exists.
    let out = run_pipeline(g).unwrap();
    assert!(out.valid);
    assert_eq!(labels.len(), out.ol.label.len());
    // ANCHOR_END: oracle
}

#[test]
fn files_and_documents() {
    // ANCHOR: io
    use antimagic::io::{export_dot, load_graph, write_edge_list};
    use antimagic::{run_pipeline, ResultDocument};

    // Lines are "u v"; '#' starts a comment; "n <count>" fixes the
    // vertex count up front.
    let mut input = String::from("# complete graph on 5 vertices\nn 5\n");
    for u in 0..5u32 {
        for v in (u + 1)..5 {
            input.push_str(&format!("{u} {v}\n"));
        }
    }
    let (g, id_map) = load_graph(&input).unwrap();
    assert_eq!((g.n(), g.m()), (5, 10));
    let text = write_edge_list(&g);
    assert!(text.starts_with("n 5\n"));

    let out = run_pipeline(g).unwrap();
    let doc = ResultDocument::from_output(&out, id_map);
    let json = serde_json::to_string_pretty(&doc).unwrap();
    assert!(json.contains("\"vertex_sums\""));

    let dot = export_dot(&out.graph, &out.ol, &out.report.sums);
    assert!(dot.starts_with("digraph"));
    // ANCHOR_END: io
}
