//! The sorting operator and sorting signature sets.

use veronese::lattice::Point;
use veronese::sorting::{delta, is_sorted_pair, sort_many, sort_pair};

fn main() {
    let a = Point::from([1, 1, 1, 3, 2]);
    let b = Point::from([0, 2, 1, 3, 2]);
    let c = Point::from([2, 0, 2, 1, 3]);

    for (u, v) in [(&a, &b), (&a, &c), (&b, &c)] {
        let (x, y) = sort_pair(u, v).expect("same degree");
        let (hi, lo) = if u > v { (u, v) } else { (v, u) };
        let sig = delta(hi, lo).expect("hi >_lex lo");
        println!(
            "sort({u}, {v}) = ({x}, {y})  sorted: {}  Delta: {}",
            is_sorted_pair(u, v),
            sig.map_or("none (condition fails)".to_string(), |s| s.to_string())
        );
    }

    let triple = sort_many(&[a, b, c]).expect("same degree");
    let shown: Vec<String> = triple.iter().map(ToString::to_string).collect();
    println!("sort of all three: {}", shown.join(" "));
}
