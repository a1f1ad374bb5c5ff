use basictop::optable::{classify, compat_degree, greatest_left_compatible, greatest_right_compatible};
use basictop::{HeytingAlgebra, Operator, Space};

fn main() -> basictop::Result<()> {
    let h = HeytingAlgebra::chain(3)?;
    let u = h.element("u").unwrap();
    println!("in the 3-chain: not not u = {}, (not u -> u) -> u = {}", h.name(h.neg(h.neg(u))), h.name(h.imp(h.imp(h.neg(u), u), u)));

    let s = Space::over(h, &["a", "b"])?;
    let ops = [
        Operator::id(&s),
        Operator::double_negation(&s),
        Operator::inhabited(&s),
        Operator::constant(&s, s.parse_subset("{a, b:u}")?)?,
    ];
    for o in &ops {
        let p = classify(o)?;
        println!(
            "{}: saturation {}, reduction {}",
            o.label(),
            p.is_saturation(),
            p.is_reduction()
        );
    }
    let dneg = &ops[1];
    let ll = greatest_left_compatible(dneg)?;
    let rr = greatest_right_compatible(dneg)?;
    for u in s.universe()? {
        println!(
            "  U = {:<12} LL(dneg)U = {:<12} RR(dneg)U = {}",
            s.format_subset(u),
            s.format_subset(&ll.eval(u)),
            s.format_subset(&rr.eval(u))
        );
    }
    let g = compat_degree(&ops[2], &ops[3])?;
    println!("compat(inhabited, const) = {}", s.name(g.degree));
    if let Some(w) = g.witness {
        println!("  attained at {}", w.render(&s));
    }
    Ok(())
}
