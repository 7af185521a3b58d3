import { beforeEach, describe, expect, it } from "vitest";

import { PreviewAudio, PreviewPlayer } from "../src/audio";
import { NEUTRAL_COLOR } from "../src/palette";
import { ExplorerView } from "../src/render";
import { adjacencyOf, cannedResponse } from "./fixture";

class SilentAudio implements PreviewAudio {
  currentTime = 0;
  duration = 10;
  volume = 1;
  playing = false;
  constructor(public url: string) {}
  play(): void {
    this.playing = true;
  }
  pause(): void {
    this.playing = false;
  }
  addEventListener(): void {}
}

let root: HTMLElement;
let player: PreviewPlayer;
let view: ExplorerView;

function circles(): SVGCircleElement[] {
  return Array.from(root.querySelectorAll<SVGCircleElement>("circle.node"));
}

function chips(): HTMLButtonElement[] {
  return Array.from(root.querySelectorAll<HTMLButtonElement>(".facet-chip"));
}

function rows(): HTMLElement[] {
  return Array.from(root.querySelectorAll<HTMLElement>(".result-row"));
}

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app")!;
  player = new PreviewPlayer((url) => new SilentAudio(url));
  view = new ExplorerView(root, player);
  view.render(cannedResponse(), 0);
});

describe("graph rendering", () => {
  it("renders one visual node per document: 13 nodes", () => {
    expect(circles()).toHaveLength(13);
  });

  it("uses exactly 3 distinct cluster colors plus neutral for the pruned node", () => {
    const fills = circles().map((c) => c.getAttribute("fill"));
    const clustered = new Set(fills.slice(0, 12));
    expect(clustered.size).toBe(3);
    expect(fills[12]).toBe(NEUTRAL_COLOR);
    expect(clustered.has(NEUTRAL_COLOR)).toBe(false);
    expect(circles()[12].classList.contains("neutral")).toBe(true);
  });

  it("draws the edge list faintly behind the nodes", () => {
    expect(root.querySelectorAll("line.edge")).toHaveLength(16);
  });

  it("re-rendering the same payload and layout seed yields identical positions", () => {
    const before = circles().map((c) => [c.getAttribute("cx"), c.getAttribute("cy")]);
    view.render(cannedResponse(), 0);
    const after = circles().map((c) => [c.getAttribute("cx"), c.getAttribute("cy")]);
    expect(after).toEqual(before);
  });

  it("shows a banner on a malformed payload", () => {
    view.render({ nope: true });
    const banner = root.querySelector<HTMLElement>(".banner")!;
    expect(banner.hidden).toBe(false);
  });

  it("shows a defensive banner when the response has no edges", () => {
    const response = cannedResponse();
    response.graph.edges = [];
    view.render(response, 0);
    expect(root.querySelector<HTMLElement>(".banner")!.hidden).toBe(false);
    expect(circles()).toHaveLength(13); // still renders what it can
  });
});

describe("facets", () => {
  it("renders 3 colored facets with label-and-count text", () => {
    const texts = chips().map((chip) => chip.querySelector(".facet-text")!.textContent);
    expect(texts).toEqual(["glass, bottle, clink (5)", "rain, water (4)", "wind (3)"]);
    const swatches = chips().map(
      (chip) => (chip.querySelector(".facet-swatch") as HTMLElement).style.backgroundColor,
    );
    expect(new Set(swatches).size).toBe(3);
  });

  it("facet click reduces the result list to the cluster size", () => {
    expect(rows()).toHaveLength(13);
    chips()[0].click();
    expect(rows()).toHaveLength(5);
    chips()[1].click();
    expect(rows()).toHaveLength(4);
    chips()[2].click();
    expect(rows()).toHaveLength(3);
  });

  it("facet click dims non-members in the graph", () => {
    chips()[2].click();
    const dimmed = circles()
      .filter((c) => c.classList.contains("dimmed"))
      .map((c) => Number(c.dataset.index));
    expect(dimmed).toEqual([0, 1, 2, 3, 4, 5, 6, 7, 8, 12]);
  });

  it("the clear button restores the full list", () => {
    chips()[0].click();
    root.querySelector<HTMLButtonElement>(".facet-clear")!.click();
    expect(rows()).toHaveLength(13);
  });

  it("facet markup snapshot", () => {
    expect(root.querySelector(".facets")!.innerHTML).toMatchSnapshot();
  });
});

describe("selection", () => {
  it("clicking a node highlights exactly its adjacency list", () => {
    for (const index of [0, 4, 9, 12]) {
      circles()[index].dispatchEvent(new Event("click"));
      const highlighted = circles()
        .filter((c) => c.classList.contains("highlighted"))
        .map((c) => Number(c.dataset.index))
        .sort((a, b) => a - b);
      expect(highlighted).toEqual(adjacencyOf(index));
    }
  });

  it("clicking a node pins it and shows name and tags in the header", () => {
    circles()[5].dispatchEvent(new Event("click"));
    expect(root.querySelector(".header-name")!.textContent).toBe("sound 5");
    expect(root.querySelector(".header-tags")!.textContent).toBe("rain, water");
    expect(circles()[5].classList.contains("selected")).toBe(true);
  });

  it("clicking a result row locates the node in the graph", () => {
    rows()[7].click();
    expect(circles()[7].classList.contains("selected")).toBe(true);
    const highlighted = circles()
      .filter((c) => c.classList.contains("highlighted"))
      .map((c) => Number(c.dataset.index))
      .sort((a, b) => a - b);
    expect(highlighted).toEqual(adjacencyOf(7));
  });
});

describe("audition", () => {
  it("hovering a node with a preview starts playback", () => {
    circles()[0].dispatchEvent(new Event("mouseenter"));
    expect(player.playingUrl).toBe("https://example.org/p/0.mp3");
  });

  it("leaving the node stops playback", () => {
    circles()[0].dispatchEvent(new Event("mouseenter"));
    circles()[0].dispatchEvent(new Event("mouseleave"));
    expect(player.playingUrl).toBeNull();
  });

  it("hovering a node without a preview shows a tooltip and stays silent", () => {
    circles()[4].dispatchEvent(new Event("mouseenter"));
    const tooltip = root.querySelector<HTMLElement>(".tooltip")!;
    expect(tooltip.hidden).toBe(false);
    expect(tooltip.textContent).toBe("no preview");
    expect(player.playingUrl).toBeNull();
  });

  it("hovering another node swaps the playing preview", () => {
    circles()[0].dispatchEvent(new Event("mouseenter"));
    circles()[1].dispatchEvent(new Event("mouseenter"));
    expect(player.playingUrl).toBe("https://example.org/p/1.mp3");
  });
});
