//! The double-transposition class and the Valentiner covering.
//!
//! `cargo run --example class_list`

use a6_hurwitz::a6val::{context, ClassElem};

fn main() {
    let ctx = context();
    let cov = ctx.covering();
    println!(
        "|A6| = {}  |V| = {}  sigma = {}",
        cov.a6().order(),
        cov.valentiner().order(),
        cov.kernel_generator()
    );
    for c in ClassElem::all() {
        let p = c.perm();
        let lift = cov.order2_lift(&p).expect("class elements lift");
        println!(
            "{:>2}  {:<12} fixes {:?}  lifts to {}",
            c.index() + 1,
            p.to_string(),
            p.fixed_points(),
            lift
        );
    }
}
