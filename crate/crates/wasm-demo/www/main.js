import init, { analyze, module, survey } from "./pkg/nakayama_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("error");
  try {
    return f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e);
    return null;
  }
}

function dim(v) {
  return v === undefined || v === null ? "-" : String(v);
}

function className(c) {
  return c.class === "Gorenstein" ? `Gorenstein(${c.v_dim})` : c.class;
}

function renderSurvey(report) {
  const cols = ["sequence", "kind", "class", "gl_dim", "fin_dim", "d", "r", "det", "gp_count"];
  const head = cols.map((c) => `<th>${c}</th>`).join("");
  const rows = report.rows.map((r) => {
    const cells = [
      `(${r.sequence.join(",")})`, r.kind, className(r.class), dim(r.gl_dim),
      dim(r.fin_dim), dim(r.d), dim(r.r), dim(r.det), dim(r.gp_count),
    ];
    return `<tr>${cells.map((c) => `<td>${c}</td>`).join("")}</tr>`;
  });
  return `<table><tr>${head}</tr>${rows.join("")}</table><p>${report.rows.length} algebras</p>`;
}

await init();

$("analyze-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const out = $("analyze-out");
  const text = show(out, () => analyze($("analyze-seq").value));
  if (text !== null) out.textContent = text;
});

$("module-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const out = $("module-out");
  const text = show(out, () => module($("module-seq").value, $("module-x").value));
  if (text !== null) out.textContent = text;
});

$("survey-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const out = $("survey-out");
  const text = show(out, () => survey(Number($("survey-n").value), Number($("survey-m").value)));
  if (text !== null) out.innerHTML = renderSurvey(JSON.parse(text));
});
