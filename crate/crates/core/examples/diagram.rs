use basictop::btop::five_node_diagram;
use basictop::{BasicTopology, HeytingAlgebra, Reduction, Saturation, Space};

fn main() -> basictop::Result<()> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["a", "b"])?;
    let t = BasicTopology::make(Saturation::id(&s), Reduction::bot(&s))?.named("[id, bot]");
    let d = five_node_diagram(&t)?;
    print!("{}", d.to_dot());
    for (check, degree) in &d.checks {
        println!("// {check}: {}", s.name(*degree));
    }
    Ok(())
}
