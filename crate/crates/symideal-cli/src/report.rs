use std::sync::atomic::{AtomicUsize, Ordering};

use serde_json::{json, Map, Value};

/// Outcome of one verb: a verdict, a JSON body and a text rendering.
pub struct Report {
    pub ok: bool,
    pub body: Map<String, Value>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report { ok: true, body: Map::new(), text: Vec::new() }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.body.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    /// Record a named check; a failed check fails the whole report.
    pub fn check(&mut self, name: &str, pass: bool) {
        self.ok &= pass;
        self.line(format!("check {name}: {}", if pass { "PASS" } else { "FAIL" }));
        let checks = self.body.entry("checks").or_insert_with(|| json!({}));
        checks[name] = pass.into();
    }

    pub fn render_json(&self, command: &str) -> String {
        let mut top = Map::new();
        top.insert("schema_version".into(), symideal::SCHEMA_VERSION.into());
        top.insert("version".into(), symideal::VERSION.into());
        top.insert("order".into(), symideal::ideals::MonomialOrder::default().tag().into());
        top.insert("command".into(), command.into());
        top.insert("ok".into(), self.ok.into());
        for (k, v) in &self.body {
            top.insert(k.clone(), v.clone());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn render_text(&self, command: &str) -> String {
        let mut s = format!(
            "symideal {} {command} (order {})\n",
            symideal::VERSION,
            symideal::ideals::MonomialOrder::default().tag()
        );
        for l in &self.text {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str(if self.ok { "result: PASS\n" } else { "result: FAIL\n" });
        s
    }
}

/// Map `f` over `items` on `jobs` worker threads, returning results in input order.
pub fn parallel_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, R)> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= items.len() {
                            break done;
                        }
                        done.push((i, f(&items[i])));
                    }
                })
            })
            .collect();
        workers.into_iter().flat_map(|w| w.join().expect("worker panicked")).collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, r)| r).collect()
}
