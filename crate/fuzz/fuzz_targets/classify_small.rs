#![no_main]
//! Parse an instance and, when it is small enough for the exponential
//! cycle searches, classify it: the classifier must not panic, the flags
//! must respect the hierarchy, and every witness must validate.

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(inst) = multilin::io::parse_instance(text) else {
        return;
    };
    let g = inst.hypergraph();
    if g.node_count() > 6 || g.edge_count() > 6 {
        return;
    }
    let report = multilin::acyclicity::classify(g);
    assert!(report.hierarchy_consistent(), "hierarchy violated");
    if let Some(w) = &report.witness.berge_cycle {
        w.validate(g).expect("berge witness validates");
    }
    if let Some(w) = &report.witness.gamma_cycle {
        w.validate(g).expect("gamma witness validates");
    }
    if let Some(w) = &report.witness.beta_cycle {
        w.validate(g).expect("beta witness validates");
    }
    if let Some(order) = &report.witness.nest_point_order {
        multilin::acyclicity::validate_nest_order(g, order).expect("nest order replays");
    }
    if let Some(rip) = &report.witness.rip_ordering {
        rip.validate().expect("rip ordering validates");
    }
});
