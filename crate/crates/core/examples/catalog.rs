use basictop::catalog::{load, NAMES};

fn main() -> basictop::Result<()> {
    let mut failures = 0;
    for name in NAMES {
        let entry = load(name)?;
        let results = entry.replay()?;
        failures += results.iter().filter(|r| !r.passed).count();
        print!("{}", entry.render(&results));
    }
    println!("{failures} checks off their registered degree");
    Ok(())
}
