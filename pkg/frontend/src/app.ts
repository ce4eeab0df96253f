// Browser wiring: render the radial embedding as SVG, the invariant
// panel, the history breadcrumb, the reduced view and the walk panel;
// drive everything through the service client.

import { ApiError, Client } from "./api.js";
import { HistoryTree } from "./history.js";
import { radialLayout, type Layout } from "./layout.js";
import { panelModel, type PanelModel } from "./panel.js";
import type { GraphJson, Summary } from "./types.js";

const SVG = "http://www.w3.org/2000/svg";

interface AppState {
  sid: string;
  summary: Summary;
}

export class ExplorerApp {
  private client: Client;
  private history: HistoryTree<Summary> | null = null;
  private sid = "";
  private pending = false;
  private selectedOrbit: string[] = [];

  constructor(private rootEl: HTMLElement, baseUrl: string) {
    this.client = new Client(baseUrl);
    this.scaffold();
  }

  private el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    cls?: string,
    text?: string,
  ): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    if (cls) node.className = cls;
    if (text !== undefined) node.textContent = text;
    return node;
  }

  private scaffold() {
    this.rootEl.innerHTML = "";
    const bar = this.el("div", "toolbar");
    const select = this.el("select");
    select.id = "fixture-select";
    for (const name of [
      "example1-preproj-a3",
      "triangle-nakayama",
      "kauer-gamma1",
      "kauer-gamma2",
      "brauer-path-3",
      "even-cycle-4",
    ]) {
      const opt = this.el("option", "", name);
      opt.value = name;
      select.append(opt);
    }
    const load = this.el("button", "", "load fixture");
    load.onclick = () => void this.loadFixture(select.value);
    const upload = this.el("input");
    upload.type = "file";
    upload.onchange = () => void this.uploadFile(upload);
    const undo = this.el("button", "", "undo");
    undo.id = "undo-button";
    undo.onclick = () => void this.undo();
    const reduced = this.el("button", "", "reduced view");
    reduced.onclick = () => void this.toggleReduced();
    const walks = this.el("button", "", "walks");
    walks.onclick = () => void this.showWalks();
    bar.append(select, load, upload, undo, reduced, walks);

    this.rootEl.append(
      bar,
      this.el("div", "banners"),
      this.el("div", "main"),
      this.el("div", "panel"),
      this.el("div", "timeline"),
      this.el("div", "aux"),
    );
  }

  banner(text: string, detail?: unknown) {
    const banners = this.rootEl.querySelector(".banners")!;
    const note = this.el("div", "banner");
    note.append(this.el("span", "", text));
    if (detail !== undefined) {
      note.append(this.el("pre", "", JSON.stringify(detail, null, 2)));
    }
    const close = this.el("button", "", "dismiss");
    close.onclick = () => note.remove();
    note.append(close);
    banners.append(note);
  }

  async loadFixture(name: string) {
    await this.createSession({ fixture: name });
  }

  async uploadFile(input: HTMLInputElement) {
    const file = input.files?.[0];
    if (!file) return;
    try {
      const graph = JSON.parse(await file.text()) as GraphJson;
      await this.createSession({ graph });
    } catch (exc) {
      this.banner("could not read the file", String(exc));
    }
  }

  private async createSession(body: { fixture?: string; graph?: GraphJson }) {
    try {
      const { session_id, summary } = await this.client.createSession(body);
      this.sid = session_id;
      this.history = new HistoryTree<Summary>(summary);
      this.render(summary);
    } catch (exc) {
      this.reportError(exc);
    }
  }

  async mutate(orbitEdge: string, direction: "left" | "right") {
    if (this.pending || !this.history) return;
    this.pending = true;
    this.setButtonsDisabled(true);
    try {
      const current = this.history.current.state;
      const result = await this.client.mutate(
        this.sid,
        orbitEdge,
        direction,
        current.version,
      );
      this.history.push(`${direction} at ${orbitEdge}`, result);
      this.render(result);
      if (result.isomorphic_fixtures.length) {
        this.banner(`isomorphic to ${result.isomorphic_fixtures.join(", ")}`);
      }
    } catch (exc) {
      this.reportError(exc);
    } finally {
      this.pending = false;
      this.setButtonsDisabled(false);
    }
  }

  async undo() {
    if (this.pending || !this.history || !this.history.canUndo()) return;
    this.pending = true;
    try {
      await this.client.undo(this.sid);
      const summary = this.history.undo();
      this.render(summary);
    } catch (exc) {
      this.reportError(exc);
    } finally {
      this.pending = false;
    }
  }

  async toggleReduced() {
    const aux = this.rootEl.querySelector(".aux")!;
    if (aux.querySelector(".reduced")) {
      aux.querySelector(".reduced")!.remove();
      return;
    }
    try {
      const payload = await this.client.reduced(this.sid);
      const box = this.el("div", "reduced");
      box.append(this.el("h3", "", "graph of orbits"));
      box.append(this.renderGraph(radialLayout(payload.orbit_graph, 320), []));
      box.append(this.el("h3", "", "reduced form"));
      box.append(this.renderGraph(radialLayout(payload.reduced_form, 320), []));
      const mult = this.el("pre", "mult");
      mult.textContent = JSON.stringify(payload.reduced_multiplicities, null, 2);
      box.append(mult);
      aux.append(box);
    } catch (exc) {
      this.reportError(exc);
    }
  }

  async showWalks() {
    try {
      const payload = await this.client.walks(this.sid);
      const aux = this.rootEl.querySelector(".aux")!;
      aux.querySelector(".walks")?.remove();
      const box = this.el("div", "walks");
      const note = payload.truncated
        ? ` (truncated at the enumeration cap ${payload.cap})`
        : ` (cap ${payload.cap})`;
      box.append(this.el("h3", "", `${payload.count} signed walks${note}`));
      const list = this.el("ul");
      for (const w of payload.walks ?? []) {
        const text = w.halves.map((h, i) => `${h}${w.signs[i]}`).join(" ");
        list.append(this.el("li", "", text));
      }
      box.append(list);
      aux.append(box);
    } catch (exc) {
      this.reportError(exc);
    }
  }

  private setButtonsDisabled(disabled: boolean) {
    this.rootEl
      .querySelectorAll("button.orbit-move")
      .forEach((b) => ((b as HTMLButtonElement).disabled = disabled));
  }

  private reportError(exc: unknown) {
    if (exc instanceof ApiError) {
      this.banner(`service error ${exc.status}`, exc.payload);
    } else {
      this.banner("request failed", String(exc));
    }
  }

  render(summary: Summary) {
    const main = this.rootEl.querySelector(".main")!;
    main.innerHTML = "";
    const layout = radialLayout(summary.graph);
    main.append(this.renderGraph(layout, this.selectedOrbit, summary));
    this.renderPanel(panelModel(summary));
    this.renderTimeline();
  }

  private renderGraph(layout: Layout, highlight: string[], summary?: Summary) {
    const svg = document.createElementNS(SVG, "svg");
    svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
    svg.setAttribute("class", "graph");
    for (const edge of layout.edges) {
      const path = document.createElementNS(SVG, "line");
      path.setAttribute("x1", String(edge.from.x));
      path.setAttribute("y1", String(edge.from.y));
      if (edge.to) {
        path.setAttribute("x2", String(edge.to.x));
        path.setAttribute("y2", String(edge.to.y));
      } else {
        path.setAttribute("x2", String(edge.crossX));
        path.setAttribute("y2", String(edge.crossY));
        const cross = document.createElementNS(SVG, "text");
        cross.setAttribute("x", String(edge.crossX));
        cross.setAttribute("y", String(edge.crossY));
        cross.textContent = "×";
        svg.append(cross);
      }
      path.setAttribute(
        "class",
        highlight.includes(edge.id) ? "edge highlight" : "edge",
      );
      path.setAttribute("data-edge", edge.id);
      if (summary) {
        const info = summary.edges.find((e) => e.id === edge.id);
        path.addEventListener("mouseenter", () => {
          this.selectedOrbit = info?.orbit ?? [];
          svg.querySelectorAll("line.edge").forEach((l) => {
            const id = l.getAttribute("data-edge")!;
            l.setAttribute(
              "class",
              this.selectedOrbit.includes(id) ? "edge highlight" : "edge",
            );
          });
          const label = svg.querySelector("#case-label");
          if (label) label.textContent = info ? `${info.orbit.join(", ")}: ${info.case}` : "";
        });
        path.addEventListener("click", () => void this.mutate(edge.id, "left"));
        path.addEventListener("contextmenu", (ev) => {
          ev.preventDefault();
          void this.mutate(edge.id, "right");
        });
      }
      svg.append(path);
    }
    for (const v of layout.vertices) {
      const dot = document.createElementNS(SVG, "circle");
      dot.setAttribute("cx", String(v.x));
      dot.setAttribute("cy", String(v.y));
      dot.setAttribute("r", "5");
      svg.append(dot);
      const label = document.createElementNS(SVG, "text");
      label.setAttribute("x", String(v.x + 8));
      label.setAttribute("y", String(v.y - 8));
      label.textContent = `${v.id} (d=${v.degree})`;
      svg.append(label);
    }
    const caseLabel = document.createElementNS(SVG, "text");
    caseLabel.setAttribute("id", "case-label");
    caseLabel.setAttribute("x", "8");
    caseLabel.setAttribute("y", "16");
    svg.append(caseLabel);
    return svg;
  }

  private renderPanel(model: PanelModel) {
    const panel = this.rootEl.querySelector(".panel")!;
    panel.innerHTML = "";
    const table = this.el("table", "invariants");
    const head = this.el("tr");
    for (const col of ["vertex", "val", "o", "n", "F", "m"]) {
      head.append(this.el("th", "", col));
    }
    table.append(head);
    for (const row of model.rows) {
      const tr = this.el("tr");
      tr.append(this.el("td", "", row.vertex));
      tr.append(this.el("td", "", String(row.val)));
      tr.append(this.el("td", "", String(row.o)));
      tr.append(this.el("td", "", String(row.n)));
      tr.append(this.el("td", "", String(row.F)));
      tr.append(this.el("td", "", row.m));
      table.append(tr);
    }
    panel.append(table);
    panel.append(
      this.el("div", "", `Nakayama order: ${model.nuOrder}`),
      this.el(
        "div",
        "",
        model.admissible
          ? "admissible"
          : `non-admissible (orbifold witness ${model.orbifoldWitness})`,
      ),
      this.el(
        "div",
        "",
        `tilting-discrete: ${model.tiltingDiscrete} — ${model.tiltingReason}`,
      ),
    );
    if (model.isomorphicFixtures.length) {
      panel.append(
        this.el("div", "", `isomorphic to ${model.isomorphicFixtures.join(", ")}`),
      );
    }
  }

  private renderTimeline() {
    const timeline = this.rootEl.querySelector(".timeline")!;
    timeline.innerHTML = "";
    if (!this.history) return;
    for (const { depth, node, onTrail } of this.history.outline()) {
      const item = this.el(
        "button",
        onTrail ? "crumb on-trail" : "crumb",
        `${"· ".repeat(depth)}${node.label}`,
      );
      item.onclick = () => {
        const state = this.history!.jump(node.id);
        this.render(state);
      };
      timeline.append(item);
    }
  }
}

declare global {
  interface Window {
    fbgaExplorer?: ExplorerApp;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  window.fbgaExplorer = new ExplorerApp(
    document.getElementById("app")!,
    (window as unknown as { FBGA_BASE?: string }).FBGA_BASE ??
      "http://127.0.0.1:8787",
  );
}
