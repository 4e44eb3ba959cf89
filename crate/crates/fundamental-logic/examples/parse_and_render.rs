//! Tour of the ASCII formula syntax: parsing, precedence, and the
//! minimal-parenthesis renderer.
//!
//! ```bash
//! cargo run --example parse_and_render
//! ```

use fundamental_logic::formula::parse;

fn main() {
    let samples = [
        "~(p & q)",
        "[]p | <>~q",
        "p & q | r",
        "p | (q | r)",
        "~~p & ~(q | _|_)",
        "[](p & T) | <>_|_",
    ];
    for text in samples {
        let f = parse(text).expect("sample parses");
        println!("{text:24} -> {:?}", f);
        println!("{:24}    renders back as `{}` ({} nodes)", "", f, f.size());
        assert_eq!(parse(&f.render()).unwrap(), f);
    }

    println!();
    println!("subformulas of p & q | r:");
    for sub in parse("p & q | r").unwrap().subformulas() {
        println!("  {sub}");
    }

    // errors carry a byte offset and the acceptable tokens
    let err = parse("p & (q |").unwrap_err();
    println!();
    println!("error example: {err}");
}
