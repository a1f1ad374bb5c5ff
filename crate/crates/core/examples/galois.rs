use basictop::galois::{aa, all_reductions, all_saturations, galois_check, jj, op_eq_degree};
use basictop::{HeytingAlgebra, Space};

fn main() -> basictop::Result<()> {
    for (label, h) in [("boolean", HeytingAlgebra::boolean2()), ("3-chain", HeytingAlgebra::chain(3)?)] {
        let s = Space::over(h, &["a", "b"])?;
        let sats = all_saturations(&s)?;
        let reds = all_reductions(&s)?;
        let mut holds = 0;
        for a in &sats {
            for j in &reds {
                if galois_check(a, j)?.holds() {
                    holds += 1;
                }
            }
        }
        let top = s.algebra().top();
        let mut fixed_sats = 0;
        for a in &sats {
            if op_eq_degree(aa(&jj(a)?)?.op(), a.op())?.degree == top {
                fixed_sats += 1;
            }
        }
        let mut fixed_reds = 0;
        for j in &reds {
            if op_eq_degree(jj(&aa(j)?)?.op(), j.op())?.degree == top {
                fixed_reds += 1;
            }
        }
        println!(
            "{label}: {} saturations, {} reductions, Galois law holds on {holds} of {} pairs",
            sats.len(),
            reds.len(),
            sats.len() * reds.len()
        );
        println!("  AA(JJ(A)) = A for {fixed_sats} saturations, JJ(AA(J)) = J for {fixed_reds} reductions");
    }
    Ok(())
}
