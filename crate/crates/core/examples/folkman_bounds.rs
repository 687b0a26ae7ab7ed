//! Closed forms, the constants registry and lower-bound bookkeeping.
//!
//!     cargo run --example folkman_bounds

use std::collections::BTreeMap;

use folkman::bounds::{
    composite_lower_bound, exists_folkman, independence_upper_bound, project_twos_sequence,
    same_m_p_vectors, value_at_q_equals_m, KnownConstants,
};
use folkman::{ArrowVector, Result};

fn main() -> Result<()> {
    let known = KnownConstants::builtin();
    for c in &known.folkman {
        println!("F_v({}; {}) = {:<3} [{}]", c.a.entries_text(), c.q, c.value, c.citation);
    }

    let v: ArrowVector = "2 2 7".parse()?;
    println!("exists F_v({}; 8): {}", v.entries_text(), exists_folkman(&v, 8));
    let ext = value_at_q_equals_m(&v)?;
    println!("F_v({}; {}) = {}, extremal graph {}", v.entries_text(), v.m(), ext.value, ext.extremal.to_graph6());
    println!("alpha bound in H({}; {}; 19): {:?}", v.entries_text(), v.m() - 1, independence_upper_bound(&v, 19));

    let same: Vec<String> = same_m_p_vectors(9, 7)?.iter().map(|a| a.to_string()).collect();
    println!("m = 9, p = 7: {}", same.join(" "));

    // (7, 7) needs alpha(i, 7) for i = 3..=6; missing values default to 2
    let mut alphas = BTreeMap::new();
    alphas.insert(6, 3);
    let w: ArrowVector = "7 7".parse()?;
    println!("F_v(7, 7; 8) >= {}", composite_lower_bound(&known, &w, &alphas)?);

    for r in 2..=5 {
        println!("F_v(2_{r}, 7; {}) >= {}", r + 6, project_twos_sequence(2, 20, r)?);
    }
    Ok(())
}
