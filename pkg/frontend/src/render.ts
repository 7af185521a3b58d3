// DOM renderer: clustered graph view, facet sidebar, result list, and the
// audition header. All interaction flows through the pure state module; this
// file only projects a ViewState onto elements and wires events back.

import { PreviewPlayer } from "./audio";
import { clusterColor } from "./palette";
import {
  createViewState,
  facetChipText,
  facetClusters,
  highlightedNeighbors,
  isDimmed,
  selectNode,
  setFacetFilter,
  ViewState,
  visibleResults,
} from "./state";
import { ClusterJobResponse, validateResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW_SIZE = 640;
const NODE_RADIUS = 7;

export class ExplorerView {
  private state: ViewState | null = null;
  private banner: HTMLElement;
  private header: HTMLElement;
  private progressBar: HTMLElement;
  private tooltip: HTMLElement;
  private svg: SVGSVGElement;
  private facetBox: HTMLElement;
  private resultList: HTMLElement;
  private circles: SVGCircleElement[] = [];

  constructor(
    private root: HTMLElement,
    private player: PreviewPlayer,
  ) {
    this.root.classList.add("explorer");
    this.banner = el("div", "banner");
    this.banner.hidden = true;
    this.header = el("header", "info-header");
    this.progressBar = el("div", "progress-bar");
    const progressTrack = el("div", "progress-track");
    progressTrack.appendChild(this.progressBar);
    this.tooltip = el("div", "tooltip");
    this.tooltip.hidden = true;

    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.classList.add("graph");
    this.svg.setAttribute("viewBox", `0 0 ${VIEW_SIZE} ${VIEW_SIZE}`);

    this.facetBox = el("aside", "facets");
    this.resultList = el("ul", "results");

    const layout = el("div", "layout");
    const graphPane = el("div", "graph-pane");
    graphPane.append(this.svg, this.tooltip);
    layout.append(graphPane, this.facetBox, this.resultList);
    this.root.append(this.banner, this.header, progressTrack, layout);

    this.player.onProgress = (fraction) => {
      this.progressBar.style.width = `${(fraction * 100).toFixed(1)}%`;
    };
  }

  /** Render a fresh service response. Malformed payloads show a banner. */
  render(payload: unknown, layoutSeed = 0): void {
    if (!validateResponse(payload)) {
      this.showBanner("Could not read the clustering response.");
      return;
    }
    const response = payload as ClusterJobResponse;
    this.banner.hidden = true;
    if (response.graph.edges.length === 0) {
      this.showBanner("The response contains no similarity edges.");
    }
    this.state = createViewState(response, layoutSeed);
    this.buildGraph();
    this.buildFacets();
    this.applyState();
  }

  getState(): ViewState | null {
    return this.state;
  }

  applyFacet(clusterId: number | null): void {
    if (!this.state) return;
    this.state = setFacetFilter(this.state, clusterId);
    this.applyState();
  }

  selectNodeIndex(nodeIndex: number | null): void {
    if (!this.state) return;
    this.state = selectNode(this.state, nodeIndex);
    this.applyState();
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
  }

  private buildGraph(): void {
    const state = this.state!;
    this.svg.replaceChildren();
    this.circles = [];
    for (const [a, b] of state.response.graph.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      line.classList.add("edge");
      line.setAttribute("x1", state.positions[a].x.toFixed(2));
      line.setAttribute("y1", state.positions[a].y.toFixed(2));
      line.setAttribute("x2", state.positions[b].x.toFixed(2));
      line.setAttribute("y2", state.positions[b].y.toFixed(2));
      this.svg.appendChild(line);
    }
    for (const node of state.response.graph.nodes) {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.classList.add("node");
      if (node.cluster === null) circle.classList.add("neutral");
      circle.dataset.index = String(node.index);
      circle.setAttribute("r", String(NODE_RADIUS));
      circle.setAttribute("cx", state.positions[node.index].x.toFixed(2));
      circle.setAttribute("cy", state.positions[node.index].y.toFixed(2));
      circle.setAttribute("fill", clusterColor(node.cluster));
      circle.addEventListener("mouseenter", () => this.onHoverNode(node.index));
      circle.addEventListener("mouseleave", () => this.onLeaveNode());
      circle.addEventListener("click", () => this.selectNodeIndex(node.index));
      this.svg.appendChild(circle);
      this.circles.push(circle);
    }
  }

  private buildFacets(): void {
    const state = this.state!;
    this.facetBox.replaceChildren();
    const heading = el("h2", "facets-title");
    heading.textContent = "Clusters";
    this.facetBox.appendChild(heading);
    for (const cluster of facetClusters(state.response)) {
      const chip = el("button", "facet-chip") as HTMLButtonElement;
      chip.dataset.cluster = String(cluster.id);
      const swatch = el("span", "facet-swatch");
      swatch.style.backgroundColor = clusterColor(cluster.id);
      const text = el("span", "facet-text");
      text.textContent = facetChipText(cluster);
      chip.append(swatch, text);
      chip.title = `confidence ${cluster.confidence.toFixed(2)}`;
      chip.addEventListener("click", () => this.applyFacet(cluster.id));
      this.facetBox.appendChild(chip);
    }
    const clear = el("button", "facet-clear") as HTMLButtonElement;
    clear.textContent = "All results";
    clear.addEventListener("click", () => this.applyFacet(null));
    this.facetBox.appendChild(clear);
  }

  private buildResultList(): void {
    const state = this.state!;
    this.resultList.replaceChildren();
    for (const node of visibleResults(state)) {
      const row = el("li", "result-row");
      row.dataset.index = String(node.index);
      const name = el("span", "result-name");
      name.textContent = node.name || node.id;
      const tags = el("span", "result-tags");
      tags.textContent = node.tags.join(", ");
      row.append(name, tags);
      if (node.index === state.selectedNode) row.classList.add("selected");
      // clicking a row locates the sound in the graph view
      row.addEventListener("click", () => this.selectNodeIndex(node.index));
      this.resultList.appendChild(row);
    }
  }

  private applyState(): void {
    const state = this.state!;
    const highlighted = new Set(highlightedNeighbors(state));
    for (const circle of this.circles) {
      const index = Number(circle.dataset.index);
      circle.classList.toggle("dimmed", isDimmed(state, index));
      circle.classList.toggle("highlighted", highlighted.has(index));
      circle.classList.toggle("selected", state.selectedNode === index);
    }
    for (const chip of this.facetBox.querySelectorAll<HTMLButtonElement>(".facet-chip")) {
      chip.classList.toggle("active", Number(chip.dataset.cluster) === state.activeCluster);
    }
    this.buildResultList();
    this.renderHeader();
  }

  private renderHeader(): void {
    const state = this.state!;
    this.header.replaceChildren();
    if (state.selectedNode === null) {
      const hint = el("span", "header-hint");
      hint.textContent =
        `${state.response.graph.nodes.length} sounds, ` +
        `${facetClusters(state.response).length} clusters, ` +
        `partition quality ${state.response.modularity.toFixed(3)}`;
      this.header.appendChild(hint);
      return;
    }
    const node = state.response.graph.nodes[state.selectedNode];
    const name = el("span", "header-name");
    name.textContent = node.name || node.id;
    const tags = el("span", "header-tags");
    tags.textContent = node.tags.join(", ");
    this.header.append(name, tags);
  }

  private onHoverNode(nodeIndex: number): void {
    const state = this.state;
    if (!state) return;
    const node = state.response.graph.nodes[nodeIndex];
    if (!node.preview_url) {
      this.tooltip.textContent = "no preview";
      this.tooltip.hidden = false;
      return;
    }
    this.player.play(node.preview_url);
  }

  private onLeaveNode(): void {
    this.tooltip.hidden = true;
    this.player.stop();
  }
}

function el(tag: string, className: string): HTMLElement {
  const element = document.createElement(tag);
  element.className = className;
  return element;
}
