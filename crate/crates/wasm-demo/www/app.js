import init, { eps_table, insert_zero, modulus_grid } from "./pkg/esym_wasm.js";

const RANGE = 5;
const $ = (id) => document.getElementById(id);

function show(el, fn) {
  try {
    el.textContent = fn();
    el.classList.remove("error");
  } catch (e) {
    el.textContent = String(e);
    el.classList.add("error");
  }
}

function renderTable() {
  show($("eps-out"), () => {
    const { rows } = JSON.parse(eps_table($("eps-values").value, $("eps-mode").value));
    return rows.map((r, i) => `row ${i + 1}: ${r.join(", ")}`).join("\n");
  });
}

function renderField() {
  const canvas = $("field");
  const ctx = canvas.getContext("2d");
  const roots = $("roots").value;
  let grid;
  try {
    grid = modulus_grid(roots, -RANGE, RANGE, -RANGE, RANGE, canvas.width, canvas.height);
  } catch (e) {
    $("poly-out").textContent = String(e);
    $("poly-out").classList.add("error");
    return;
  }
  const max = grid.reduce((m, v) => Math.max(m, v), 1e-12);
  const img = ctx.createImageData(canvas.width, canvas.height);
  grid.forEach((v, i) => {
    const t = v / max;
    // Bands every tenth of the range make level sets visible.
    const band = Math.floor(t * 10) % 2 ? 0.92 : 1;
    img.data[4 * i] = 255 * t * band;
    img.data[4 * i + 1] = 160 * (1 - t) * band;
    img.data[4 * i + 2] = 220 * (1 - t * t) * band;
    img.data[4 * i + 3] = 255;
  });
  ctx.putImageData(img, 0, 0);
  show($("poly-out"), () => {
    const parts = roots.trim().split(/\s+/).filter(Boolean);
    const last = parts.pop() ?? "0";
    const { coeffs, pretty } = JSON.parse(insert_zero(parts.join(" "), last));
    return roots.trim() ? `f(z) = ${pretty}\ncoeffs: ${coeffs.join(", ")}` : "f(z) = 1";
  });
}

function clickToRoot(ev) {
  const canvas = $("field");
  const rect = canvas.getBoundingClientRect();
  const px = ((ev.clientX - rect.left) / rect.width) * (canvas.width - 1);
  const py = ((ev.clientY - rect.top) / rect.height) * (canvas.height - 1);
  const re = Math.round((px / (canvas.width - 1)) * 2 * RANGE - RANGE);
  const im = Math.round(RANGE - (py / (canvas.height - 1)) * 2 * RANGE);
  $("roots").value = `${$("roots").value.trim()} (${re},${im})`.trim();
  renderField();
}

await init();
$("eps-values").addEventListener("input", renderTable);
$("eps-mode").addEventListener("change", renderTable);
$("roots").addEventListener("input", renderField);
$("field").addEventListener("click", clickToRoot);
$("reset").addEventListener("click", () => {
  $("roots").value = "";
  renderField();
});
renderTable();
renderField();
