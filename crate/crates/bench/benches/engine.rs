use criterion::{black_box, criterion_group, criterion_main, Criterion};
use qiso_bench::su2_polys;
use qiso_core::freewords::vrep::no_action_witness;
use qiso_core::ncalg::{complete, CompletionOptions};
use qiso_core::qgroups::su2::{su2, su2_uncompleted};
use qiso_core::repnum::oracle::Su2Oracle;

fn completion(c: &mut Criterion) {
    c.bench_function("su2 completion, bound 8", |b| {
        b.iter(|| complete(black_box(&su2_uncompleted()), CompletionOptions::bound(8)).unwrap())
    });
}

fn multiplication(c: &mut Criterion) {
    let ps = su2_polys(64, 4, 7);
    let p = su2();
    c.bench_function("su2 product of degree-4 normal forms", |b| {
        b.iter(|| {
            for w in ps.windows(2) {
                black_box(p.mul(&w[0], &w[1]));
            }
        })
    });
}

fn oracle(c: &mut Criterion) {
    let o = Su2Oracle::new(0.5, 48, 8).unwrap();
    let ps = su2_polys(32, 4, 11);
    let js = o.interior(4);
    c.bench_function("oracle apply on interior vectors", |b| {
        b.iter(|| {
            for q in &ps {
                for &j in js.iter().take(16) {
                    black_box(o.apply(q, j).unwrap());
                }
            }
        })
    });
}

fn witness(c: &mut Criterion) {
    c.bench_function("no-action witness, N_max = 40", |b| b.iter(|| no_action_witness(black_box(1.0 / 3.0), 40).unwrap()));
}

criterion_group!(benches, completion, multiplication, oracle, witness);
criterion_main!(benches);
