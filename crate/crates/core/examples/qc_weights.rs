use anticode::codes::lookup;
use anticode::Budget;

fn main() {
    for name in ["[40,5,28]", "[39,4,28]"] {
        let code = lookup(name).unwrap().code().unwrap().unwrap();
        let w = code.weight_distribution(&Budget::default()).unwrap();
        let terms: Vec<String> = w.nonzero().map(|(s, a)| format!("A_{s}={a}")).collect();
        println!("{name}: {}", terms.join(" "));
    }
}
