use basictop::galois::all_reductions;
use basictop::rep::{represent_reduction, representable, round_trip_check};
use basictop::{HRelation, HeytingAlgebra, Space};

fn main() -> basictop::Result<()> {
    let h = HeytingAlgebra::chain(3)?;
    let u = h.element("u").unwrap();
    let s = Space::over(h.clone(), &["a", "b", "c"])?;
    let x = Space::over(h, &["x", "y"])?;
    let mut r = HRelation::new("r", &x, &s)?;
    r.set(0, 0, s.algebra().top());
    r.set(0, 1, u);
    r.set(1, 2, s.algebra().top());
    let t = representable(&r)?;
    for v in [s.full(), s.parse_subset("{a, b}")?, s.parse_subset("{c:u}")?] {
        println!(
            "U = {:<12} interior {:<12} closure {}",
            s.format_subset(&v),
            s.format_subset(&t.red().op().eval(&v)),
            s.format_subset(&t.sat().op().eval(&v))
        );
    }

    let two = Space::over(HeytingAlgebra::chain(3)?, &["a", "b"])?;
    let reds = all_reductions(&two)?;
    let mut ok = 0;
    for j in &reds {
        if round_trip_check(j)?.holds() {
            ok += 1;
        }
    }
    println!("{ok} of {} reductions on two points round-trip", reds.len());
    let j = &reds[reds.len() / 2];
    let rel = represent_reduction(j)?;
    println!("{} is represented by a relation from {} points:", j.label(), rel.domain().points());
    for (x, a, d) in rel.entries() {
        println!("  {} {} {}", rel.domain().carrier().name(x), two.carrier().name(a), two.name(d));
    }
    Ok(())
}
