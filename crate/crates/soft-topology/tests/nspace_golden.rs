//! Golden tests for soft N-spaces, pinned to the shipped fixtures: the
//! four-component quad space (N-open families, per-parameter crisp slices,
//! componentwise subspaces), the diagnostic pair (whose second family
//! fails the axioms as printed — the tests assert the computed verdicts)
//! and the subspace pair (2-wise T0 fails globally but holds on a carrier).

use soft_topology::{
    validate, PooledFamily, SoftNSpace, SoftSet, SoftTopology, ViolationKind, Workspace,
};
use std::path::PathBuf;
use std::sync::Arc;

fn fixture(name: &str) -> Workspace {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    Workspace::load(path).expect("fixture loads")
}

fn topology(ws: &Workspace, name: &str) -> SoftTopology {
    SoftTopology::new(ws.context(), &ws.family(name).unwrap()).unwrap()
}

fn space(ws: &Workspace, names: &[&str]) -> SoftNSpace {
    SoftNSpace::new(
        ws.context(),
        names.iter().map(|n| topology(ws, n)).collect(),
    )
    .unwrap()
}

fn pts(ws: &Workspace, labels: &[&str]) -> Vec<usize> {
    labels
        .iter()
        .map(|l| ws.context().point_index(l).unwrap())
        .collect()
}

#[test]
fn quad_space_components_validate_and_pool() {
    let ws = fixture("quad_space.json");
    for name in ["tau1", "tau2", "tau3", "tau4"] {
        let report = validate(ws.context(), &ws.family(name).unwrap()).unwrap();
        assert!(report.is_valid(), "{name}");
    }
    let quad = space(&ws, &["tau1", "tau2", "tau3", "tau4"]);
    assert_eq!(quad.n(), 4);
    assert!(quad.duplicate_components().is_empty());

    // Every component open is N-open; the union of two opens from
    // different components needn't be: H = F4 ⊔ F7 is not.
    for name in ["F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"] {
        assert!(quad.is_n_open(&ws.resolve_set(name).unwrap()).unwrap(), "{name}");
    }
    let h = ws
        .resolve_set("F4")
        .unwrap()
        .union(&ws.resolve_set("F7").unwrap())
        .unwrap();
    assert_eq!(h.row(0), pts(&ws, &["h4", "h5", "h7"]));
    assert_eq!(h.row(1), pts(&ws, &["h4", "h7"]));
    assert_eq!(h.row(2), pts(&ws, &["h6", "h8"]));
    assert!(!quad.is_n_open(&h).unwrap());
    assert!(!quad.is_n_closed(&h.complement()).unwrap());

    // The pooled N-open family: components in order, canonical within each,
    // first occurrence kept. 2 + 8 distinct member sets in total.
    assert_eq!(quad.n_open_family().len(), 10);
}

#[test]
fn quad_space_crisp_slices_match_the_tabulated_families() {
    let ws = fixture("quad_space.json");
    let quad = space(&ws, &["tau1", "tau2", "tau3", "tau4"]);
    let x = pts(
        &ws,
        &["h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8"],
    );

    // All twelve families, component-major, each in canonical order.
    let expected: [[Vec<Vec<usize>>; 3]; 4] = [
        [
            vec![vec![], pts(&ws, &["h1"]), pts(&ws, &["h1", "h2"]), x.clone()],
            vec![vec![], pts(&ws, &["h2", "h4"]), pts(&ws, &["h2", "h4", "h6"]), x.clone()],
            vec![vec![], pts(&ws, &["h3"]), pts(&ws, &["h2", "h3"]), x.clone()],
        ],
        [
            vec![vec![], pts(&ws, &["h3"]), x.clone()],
            vec![vec![], pts(&ws, &["h4"]), x.clone()],
            vec![vec![], pts(&ws, &["h5"]), x.clone()],
        ],
        [
            vec![vec![], pts(&ws, &["h4"]), pts(&ws, &["h4", "h5"]), x.clone()],
            vec![vec![], pts(&ws, &["h4"]), pts(&ws, &["h4", "h6"]), x.clone()],
            vec![
                vec![],
                pts(&ws, &["h6"]),
                pts(&ws, &["h6", "h8"]),
                pts(&ws, &["h5", "h6", "h8"]),
                x.clone(),
            ],
        ],
        [
            vec![vec![], pts(&ws, &["h5", "h7"]), pts(&ws, &["h5", "h7", "h8"]), x.clone()],
            vec![vec![], pts(&ws, &["h7"]), x.clone()],
            vec![vec![], pts(&ws, &["h6", "h8"]), pts(&ws, &["h6", "h7", "h8"]), x.clone()],
        ],
    ];
    for e in 0..3 {
        let slices = quad.crisp_n_slice(e).unwrap();
        assert_eq!(slices.len(), 4);
        for (i, slice) in slices.iter().enumerate() {
            assert_eq!(slice, &expected[i][e], "component {} parameter {}", i + 1, e + 1);
            let crisp = soft_topology::CrispFamily::new(8, slice).unwrap();
            assert!(crisp.is_topology());
        }
    }
}

#[test]
fn quad_space_subspace_on_five_points() {
    let ws = fixture("quad_space.json");
    let quad = space(&ws, &["tau1", "tau2", "tau3", "tau4"]);
    let carrier = pts(&ws, &["h1", "h3", "h4", "h5", "h8"]);
    let sub = quad.n_subspace(&carrier).unwrap();

    let sctx = sub.context();
    let labels: Vec<&str> = sctx.points().iter().map(String::as_str).collect();
    assert_eq!(labels, ["h1", "h3", "h4", "h5", "h8"]);
    // All components share the one subspace context.
    for component in sub.topologies() {
        assert!(Arc::ptr_eq(component.context(), sctx));
        assert!(component.revalidate().is_valid());
    }

    let row = |labels: &[&str]| -> Vec<usize> {
        labels.iter().map(|l| sctx.point_index(l).unwrap()).collect()
    };
    let set = |rows: &[&[&str]]| -> SoftSet {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| row(r)).collect();
        SoftSet::from_rows(sctx, &rows).unwrap()
    };

    // Restrictions of F1 and F2 coincide, so the first component collapses
    // to three members; the others restrict as tabulated.
    let expected: [Vec<SoftSet>; 4] = [
        vec![set(&[&["h1"], &["h4"], &["h3"]])],
        vec![set(&[&["h3"], &["h4"], &["h5"]])],
        vec![
            set(&[&["h4"], &["h4"], &[]]),
            set(&[&["h4", "h5"], &["h4"], &["h8"]]),
            set(&[&["h1", "h3", "h4", "h5", "h8"], &["h4"], &["h5", "h8"]]),
        ],
        vec![
            set(&[&["h5"], &[], &["h8"]]),
            set(&[&["h5", "h8"], &["h1", "h3", "h4", "h5", "h8"], &["h8"]]),
        ],
    ];
    for (component, extras) in sub.topologies().iter().zip(&expected) {
        assert_eq!(component.len(), extras.len() + 2);
        for e in extras {
            assert!(component.is_open(e).unwrap());
        }
    }
}

#[test]
fn diagnostic_pair_second_family_fails_as_printed() {
    let ws = fixture("diagnostic_pair.json");
    assert!(validate(ws.context(), &ws.family("tau1").unwrap())
        .unwrap()
        .is_valid());

    let report = validate(ws.context(), &ws.family("tau2").unwrap()).unwrap();
    assert!(!report.is_valid());
    let v = report.violation.unwrap();
    assert_eq!(v.kind, ViolationKind::MissingIntersection);
    // Positions in the declared list [NULL, ABS, F2, F3, F4, F5].
    assert_eq!(v.operands, Some((2, 4)));
    assert!(v.missing.row(0).is_empty());
    assert_eq!(v.missing.row(1), pts(&ws, &["h3"]));
}

#[test]
fn diagnostic_pair_pooled_t0_verdicts_and_trace() {
    let ws = fixture("diagnostic_pair.json");
    let tau1 = ws.family("tau1").unwrap();
    let tau2 = ws.family("tau2").unwrap();

    // The second family alone does not separate (h2,e1) from (h2,e2).
    let single = PooledFamily::new(ws.context(), &[tau2.clone()]).unwrap();
    let report = single.check(soft_topology::SepAxiom::T0);
    assert!(!report.holds);
    let (p, q) = report.witness.unwrap();
    assert_eq!((p.to_string(), q.to_string()), ("(h2, e1)".into(), "(h2, e2)".into()));

    // Pooled together the two families separate every pair of soft points.
    let pooled = PooledFamily::new(ws.context(), &[tau1.clone(), tau2.clone()]).unwrap();
    assert!(pooled.check(soft_topology::SepAxiom::T0).holds);
    let trace = pooled.t0_trace();
    assert_eq!(trace.len(), 15);
    assert!(trace.iter().all(|row| row.separator.is_some()));

    // The pair ((h1,e2),(h3,e2)) is separated by F2 — pooled declaration
    // order is [NULL, ABS, F1, F2, F3, F4, F5], so index 3.
    let row = trace
        .iter()
        .find(|r| r.first.to_string() == "(h1, e2)" && r.second.to_string() == "(h3, e2)")
        .expect("the pair appears in the trace");
    assert_eq!(row.separator, Some(3));
    assert_eq!(pooled.opens()[3], ws.resolve_set("F2").unwrap());
}

#[test]
fn diagnostic_pair_generated_join_is_t0() {
    let ws = fixture("diagnostic_pair.json");
    let mut pooled = ws.family("tau1").unwrap();
    pooled.extend(ws.family("tau2").unwrap());
    // The printed second family is not a topology, so the lattice join is
    // taken as the topology generated by everything declared.
    let join = SoftTopology::generate(ws.context(), &pooled).unwrap();
    assert_eq!(join.len(), 17);
    for name in ["F1", "F2", "F3", "F4", "F5"] {
        assert!(join.is_open(&ws.resolve_set(name).unwrap()).unwrap());
    }
    assert!(join.is_t0().holds);
}

#[test]
fn subspace_pair_t0_fails_globally_but_holds_on_a_carrier() {
    let ws = fixture("subspace_pair.json");
    let pair = space(&ws, &["tau1", "tau2"]);

    let report = pair.nwise_t0();
    assert!(!report.holds);
    let (p, q) = report.witness.unwrap();
    assert_eq!((p.to_string(), q.to_string()), ("(h2, e1)".into(), "(h1, e2)".into()));

    let sub = pair.n_subspace(&pts(&ws, &["h1", "h3"])).unwrap();
    assert!(sub.nwise_t0().holds);

    // Exact subspace components.
    let sctx = sub.context();
    let h1 = sctx.point_index("h1").unwrap();
    let h3 = sctx.point_index("h3").unwrap();
    let t1 = &sub.topologies()[0];
    assert_eq!(t1.len(), 3);
    assert!(t1
        .is_open(&SoftSet::from_rows(sctx, &[vec![h1], vec![]]).unwrap())
        .unwrap());
    let t2 = &sub.topologies()[1];
    assert_eq!(t2.len(), 4);
    assert!(t2
        .is_open(&SoftSet::from_rows(sctx, &[vec![], vec![h1]]).unwrap())
        .unwrap());
    assert!(t2
        .is_open(&SoftSet::from_rows(sctx, &[vec![h3], vec![h1]]).unwrap())
        .unwrap());
}

#[test]
fn implication_report_holds_on_the_quad_space() {
    let ws = fixture("quad_space.json");
    let quad = space(&ws, &["tau1", "tau2", "tau3", "tau4"]);
    let report = quad.check_implications();
    assert!(report.all_hold());
    for check in report
        .componentwise_to_nwise()
        .iter()
        .chain(&report.nwise_to_supremum())
        .chain(&report.chain())
    {
        assert!(check.ok(), "{} ⇒ {}", check.antecedent, check.consequent);
    }
}
