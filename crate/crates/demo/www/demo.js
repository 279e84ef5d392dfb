import init, { color_regular, list_color_regular, orient_random } from "./pkg/brooks_demo.js";

const canvas = document.getElementById("view");
const ctx = canvas.getContext("2d");
const out = document.getElementById("out");

const PALETTE = [
  "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
  "#f032e6", "#bfef45", "#fabed4", "#469990", "#dcbeff", "#9a6324",
];

const num = (id) => Number(document.getElementById(id).value);

function layout(n) {
  const r = canvas.width / 2 - 40;
  const c = canvas.width / 2;
  return Array.from({ length: n }, (_, i) => {
    const t = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    return [c + r * Math.cos(t), c + r * Math.sin(t)];
  });
}

function line(a, b, color, width) {
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.beginPath();
  ctx.moveTo(a[0], a[1]);
  ctx.lineTo(b[0], b[1]);
  ctx.stroke();
}

function arrow(a, b, color) {
  const dx = b[0] - a[0];
  const dy = b[1] - a[1];
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  const tip = [b[0] - ux * 12, b[1] - uy * 12];
  line(a, tip, color, 2);
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.moveTo(tip[0], tip[1]);
  ctx.lineTo(tip[0] - ux * 9 - uy * 5, tip[1] - uy * 9 + ux * 5);
  ctx.lineTo(tip[0] - ux * 9 + uy * 5, tip[1] - uy * 9 - ux * 5);
  ctx.closePath();
  ctx.fill();
}

function draw(data, opts = {}) {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = layout(data.n);
  const arcs = opts.arcs ?? [];
  const directed = new Set(arcs.map(([t, h]) => `${Math.min(t, h)}-${Math.max(t, h)}`));
  for (const [u, v] of data.edges) {
    if (!directed.has(`${u}-${v}`)) line(pos[u], pos[v], "#bbb", 1);
  }
  for (const [t, h] of arcs) arrow(pos[t], pos[h], "#333");
  const marked = new Set(opts.marked ?? []);
  pos.forEach(([x, y], v) => {
    const c = opts.colors ? opts.colors[v] : undefined;
    ctx.fillStyle = c === undefined ? "#fff" : PALETTE[c % PALETTE.length];
    ctx.strokeStyle = marked.has(v) ? "#000" : "#666";
    ctx.lineWidth = marked.has(v) ? 4 : 1;
    ctx.beginPath();
    ctx.arc(x, y, 11, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#000";
    ctx.font = "10px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText(String(v), x, y + 3);
  });
}

function show(json, render) {
  const data = JSON.parse(json);
  if (data.error) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    out.textContent = `error: ${data.error}`;
    return;
  }
  render(data);
}

document.getElementById("c-go").onclick = () =>
  show(color_regular(num("c-n"), num("c-d"), BigInt(num("c-seed"))), (d) => {
    draw(d, { colors: d.colors });
    const branches = d.branches.filter(([, k]) => k > 0).map(([b, k]) => `${b} ×${k}`).join(", ");
    out.textContent = `${d.num_colors} colors (bound ${d.bound}), verified: ${d.verified}\nbranches: ${branches}`;
  });

document.getElementById("l-go").onclick = () =>
  show(list_color_regular(num("l-n"), num("l-d"), BigInt(num("l-seed"))), (d) => {
    draw(d, { colors: d.colors, arcs: d.arcs, marked: d.h });
    const lists = d.lists.map((l, v) => `${v}: {${l.join(",")}} → ${d.colors[v]}`).join("\n");
    out.textContent =
      `verified: ${d.verified}\nA = {${d.a.join(", ")}}\n` +
      `critical subgraph H (bold) = {${d.h.join(", ")}}, arrows show its orientation\n${lists}`;
  });

document.getElementById("o-go").onclick = () =>
  show(orient_random(num("o-n"), num("o-p"), num("o-k"), BigInt(num("o-seed"))), (d) => {
    if (d.feasible) {
      draw(d, { arcs: d.arcs });
      out.textContent = `every vertex has in-degree ≥ ${d.demand}`;
    } else {
      draw(d, { marked: d.violator });
      out.textContent =
        `impossible: the bold set {${d.violator.join(", ")}} touches fewer edges than it needs`;
    }
  });

await init();
out.textContent = "Ready.";
document.getElementById("c-go").click();
