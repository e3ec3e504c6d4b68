//! Exploratory output: the class maximum of SLEE as the diameter grows.
//! Printed for inspection; only the existence of each maximum is asserted.

use slee_core::search::diameter_class_maxima;

#[test]
fn class_maximum_by_diameter() {
    for n in [5, 6] {
        let maxima = diameter_class_maxima(n, 2).unwrap();
        let values: Vec<f64> = maxima.iter().map(|&(_, m)| m.expect("every diameter 1..n occurs")).collect();
        let decreasing = values.windows(2).all(|w| w[0] > w[1]);
        println!("n = {n}: maxima by diameter {values:?}, strictly decreasing: {decreasing}");
    }
}
