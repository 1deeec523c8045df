//! A set-valued reading of the hexagon: the six subsets
//! {}, {-1}, {1}, {-1,0}, {0,1}, {-1,0,1} of a 3-element universe,
//! ordered by inclusion with set complement as orthocomplement, form an
//! ortholattice isomorphic to O6. The isomorphism search recovers the
//! assignment {-1} -> x, {1} -> y', {-1,0} -> y, {0,1} -> x'.

use qlmc::lattice::{builtin, find_isomorphism, from_subset_family, SubsetFamilySpec};

fn main() {
    let spec = SubsetFamilySpec {
        name: "hexagon-sets".into(),
        universe: vec!["-1".into(), "0".into(), "1".into()],
        family: vec![
            vec![],
            vec![0],
            vec![2],
            vec![0, 1],
            vec![1, 2],
            vec![0, 1, 2],
        ],
    };
    let sets = from_subset_family(&spec).unwrap();
    println!(
        "built `{}` with {} elements; invariants hold: {}",
        sets.name(),
        sets.len(),
        sets.table_invariants_hold()
    );

    let o6 = builtin("O6").unwrap();
    match find_isomorphism(&o6, &sets) {
        Some(map) => {
            println!("ortho-isomorphic to O6:");
            for (a, &b) in map.iter().enumerate() {
                println!("  {:<3} -> {}", o6.label(a), sets.label(b));
            }
        }
        None => println!("not isomorphic to O6 (unexpected)"),
    }
}
