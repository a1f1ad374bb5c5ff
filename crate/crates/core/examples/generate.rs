use basictop::gen::{generate, sat_iterates};
use basictop::{AxiomSet, HeytingAlgebra, Space};

fn main() -> basictop::Result<()> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["0", "1", "2", "3"])?;
    let mut ax = AxiomSet::new(&s, "successor");
    for i in 0..3 {
        ax.add(i, s.crisp(&[(i + 1).to_string()])?)?;
    }
    ax.add(3, s.crisp(&["0", "1"])?)?;
    let t = generate(&ax)?;
    for u in [s.crisp(&["3"])?, s.crisp(&["2", "3"])?, s.empty()] {
        let steps: Vec<String> = sat_iterates(&ax, &u)?.iter().map(|p| s.format_subset(p)).collect();
        println!("A{} = {}  via {}", s.format_subset(&u), s.format_subset(&t.sat().op().eval(&u)), steps.join(" -> "));
    }
    for v in [s.full(), s.crisp(&["0", "1", "2"])?] {
        println!("J{} = {}", s.format_subset(&v), s.format_subset(&t.red().op().eval(&v)));
    }
    println!("reduced: {}, saturated: {}", t.is_reduced()?.holds, t.is_saturated()?.holds);
    Ok(())
}
