use basictop::cli::{run, Command, Config};
use basictop::parse_document;

fn main() -> basictop::Result<()> {
    let text = include_str!("three_valued.btop");
    let ws = parse_document(text)?;
    print!("{}", ws.summary());
    let config = Config::default();
    for command in [
        Command::Classify { op: "jp".into() },
        Command::Galois { sat: "ap".into(), red: "jp".into() },
        Command::Generate { axiom_set: "cover".into() },
        Command::Diagram { topology: "tj".into() },
    ] {
        let out = run(&command, Some(&ws), &config);
        print!("{}", out.text);
        println!("exit {}", out.code);
    }
    print!("{}", ws.serialize());
    Ok(())
}
