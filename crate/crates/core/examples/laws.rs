use basictop::laws::{run_suite, Population, Suite};
use basictop::{HeytingAlgebra, Space};

fn main() -> basictop::Result<()> {
    let s = Space::over(HeytingAlgebra::chain(3)?, &["a", "b"])?;
    let pop = Population::build(&s, 200, 1)?;
    println!("{} saturations, {} reductions", pop.sats.len(), pop.reds.len());
    for suite in Suite::ALL {
        print!("{}", run_suite(&s, suite, &pop)?.render(&s));
    }

    let big = Space::over(HeytingAlgebra::boolean2(), &["a", "b", "c", "d"])?;
    let sampled = Population::build(&big, 50, 9)?;
    print!("{}", run_suite(&big, Suite::Triangle, &sampled)?.render(&big));
    Ok(())
}
