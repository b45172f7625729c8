// Front page (language, level, polytopes per round) and the five-round game
// screen: rotatable solids on top, swappable nets below, submit / solution /
// next-round flow, with the high score kept in browser local storage.

import { fetchBundle, fetchManifest, tripletsOf } from "./assets.js";
import { BoardState, HighScores, drawRounds } from "./board.js";
import { drawNet } from "./render2d.js";
import { PolytopeView } from "./render3d.js";
import { mulberry32 } from "./rng.js";
import { AssetBundle } from "./types.js";

const STRINGS: Record<string, Record<string, string>> = {
  en: {
    title: "Match the nets",
    rules: "Each round shows polytopes above and their unfolded nets below, " +
      "in scrambled order. Drag a polytope to rotate it. Click two nets to swap " +
      "them until each net sits under its polytope, then press Submit. " +
      "A game is five rounds; one point per correct match.",
    start: "Start game",
    submit: "Submit",
    solution: "Show solution",
    next: "Next round",
    newGame: "New game",
    round: "Round",
    score: "Score",
    final: "Final score",
    highScore: "High score",
    newRecord: "New high score!",
    unplayable: "Asset failed to load; this round cannot be scored.",
  },
};

const HUES = [0, 210, 120, 45, 280];

type Screen = "front" | "game";

export class App {
  private board: BoardState | null = null;
  private bundles = new Map<string, AssetBundle>();
  private level = 1;
  private k = 3;
  private language = "en";
  private selectedNet: number | null = null;
  private roundPlayable = true;
  private highScores = new HighScores(window.localStorage);

  constructor(private root: HTMLElement) {
    this.renderFrontPage();
  }

  private t(key: string): string {
    return STRINGS[this.language]?.[key] ?? STRINGS.en[key] ?? key;
  }

  private show(screen: Screen, build: (host: HTMLElement) => void): void {
    this.root.innerHTML = "";
    const host = document.createElement("div");
    host.className = screen;
    this.root.appendChild(host);
    build(host);
  }

  // -- front page ----------------------------------------------------------

  private renderFrontPage(): void {
    this.show("front", (host) => {
      const title = document.createElement("h1");
      title.textContent = this.t("title");
      const rules = document.createElement("p");
      rules.textContent = this.t("rules");
      rules.className = "rules";

      const controls = document.createElement("div");
      controls.className = "controls";
      const langSel = select(Object.keys(STRINGS), this.language, (v) => {
        this.language = v;
        this.renderFrontPage();
      }, "language");
      const levelSel = select(["1", "2", "3", "4", "5", "6", "7"], String(this.level), (v) => {
        this.level = Number(v);
        this.renderFrontPage();
      }, "level");
      const kSel = select(["2", "3", "4", "5"], String(this.k), (v) => {
        this.k = Number(v);
      }, "polytopes per round");
      controls.append(labeled("Language", langSel), labeled("Level", levelSel));
      if (this.level !== 7) {
        controls.append(labeled("Polytopes per round", kSel));
      }

      const start = document.createElement("button");
      start.textContent = this.t("start");
      start.className = "primary";
      start.addEventListener("click", () => void this.startGame());

      host.append(title, rules, controls, start);
    });
  }

  // -- game ----------------------------------------------------------------

  private async startGame(): Promise<void> {
    const k = this.level === 7 ? 3 : this.k;
    try {
      const manifest = await fetchManifest();
      const pool = manifest.levels[String(this.level)] ?? [];
      const triplets = this.level === 7 ? tripletsOf(pool) : undefined;
      const rand = mulberry32(Date.now() >>> 0);
      this.board = new BoardState(drawRounds(pool, k, rand, triplets));
      await this.renderRound();
    } catch (err) {
      this.show("front", (host) => {
        const msg = document.createElement("p");
        msg.className = "error";
        msg.textContent = String(err);
        host.append(msg, button(this.t("newGame"), () => this.renderFrontPage()));
      });
    }
  }

  private async bundleFor(id: string): Promise<AssetBundle> {
    const cached = this.bundles.get(id);
    if (cached) return cached;
    const bundle = await fetchBundle(id);
    this.bundles.set(id, bundle);
    return bundle;
  }

  private async renderRound(): Promise<void> {
    const board = this.board;
    if (!board) return;
    this.selectedNet = null;
    const round = board.currentRound;
    const loaded = await Promise.allSettled(round.polytopeIds.map((id) => this.bundleFor(id)));
    this.roundPlayable = loaded.every((r) => r.status === "fulfilled");

    this.show("game", (host) => {
      const status = document.createElement("div");
      status.className = "status";
      status.textContent =
        `${this.t("round")} ${board.roundIndex + 1} / ${board.rounds.length}` +
        `   ${this.t("score")}: ${board.totalScore}`;
      host.appendChild(status);

      const top = document.createElement("div");
      top.className = "row polytopes";
      loaded.forEach((result, i) => {
        const tile = document.createElement("div");
        tile.className = "tile";
        tile.dataset.polytope = String(i);
        if (result.status === "fulfilled") {
          const canvas = document.createElement("canvas");
          canvas.width = canvas.height = 220;
          tile.appendChild(canvas);
          new PolytopeView(canvas, result.value.mesh);
        } else {
          tile.classList.add("error");
          tile.textContent = String(result.reason);
        }
        top.appendChild(tile);
      });
      host.appendChild(top);

      const bottom = document.createElement("div");
      bottom.className = "row nets";
      board.slotContents().forEach((polytopeIdx, slot) => {
        const tile = document.createElement("div");
        tile.className = "tile net";
        tile.dataset.slot = String(slot);
        const source = loaded[polytopeIdx];
        if (source.status === "fulfilled") {
          const canvas = document.createElement("canvas");
          canvas.width = canvas.height = 220;
          tile.appendChild(canvas);
          drawNet(canvas, source.value.net, source.value.mesh.colors);
        } else {
          tile.classList.add("error");
          tile.textContent = this.t("unplayable");
        }
        tile.addEventListener("click", () => this.onNetClick(slot));
        bottom.appendChild(tile);
      });
      host.appendChild(bottom);

      const bar = document.createElement("div");
      bar.className = "actions";
      const submit = button(this.t("submit"), () => this.onSubmit());
      submit.classList.add("primary");
      submit.disabled = !this.roundPlayable;
      bar.appendChild(submit);
      if (!this.roundPlayable) {
        bar.appendChild(button(this.t("newGame"), () => this.renderFrontPage()));
      }
      host.appendChild(bar);
    });
  }

  private onNetClick(slot: number): void {
    const board = this.board;
    if (!board || board.phase !== "playing") return;
    const tiles = this.root.querySelectorAll<HTMLElement>(".tile.net");
    if (this.selectedNet === null) {
      this.selectedNet = slot;
      tiles[slot]?.classList.add("selected");
      return;
    }
    if (this.selectedNet !== slot) {
      board.swapNets(this.selectedNet, slot);
    }
    this.selectedNet = null;
    void this.renderRound();
  }

  private onSubmit(): void {
    const board = this.board;
    if (!board || board.phase !== "playing") return;
    const score = board.submitRound();
    this.renderReveal(score);
  }

  private renderReveal(score: number): void {
    const board = this.board;
    if (!board) return;
    const bar = this.root.querySelector(".actions");
    if (!(bar instanceof HTMLElement)) return;
    bar.innerHTML = "";
    const line = document.createElement("span");
    line.className = "score-reveal";
    line.textContent = `${this.t("score")}: ${score} / ${board.k}`;
    bar.appendChild(line);
    bar.appendChild(button(this.t("solution"), () => this.showSolution()));
    if (board.phase === "finished") {
      this.renderFinal(bar);
    } else {
      const next = button(this.t("next"), () => {
        board.nextRound();
        void this.renderRound();
      });
      next.classList.add("primary");
      bar.appendChild(next);
    }
  }

  private showSolution(): void {
    const board = this.board;
    if (!board) return;
    // connector highlights: matching hues on each polytope and its net
    const polyTiles = this.root.querySelectorAll<HTMLElement>(".polytopes .tile");
    const netTiles = this.root.querySelectorAll<HTMLElement>(".nets .tile");
    polyTiles.forEach((tile, i) => {
      tile.style.outline = `4px solid hsl(${HUES[i % HUES.length]} 80% 45%)`;
    });
    board.slotContents().forEach((polytopeIdx, slot) => {
      const tile = netTiles[slot];
      if (tile) {
        tile.style.outline = `4px solid hsl(${HUES[polytopeIdx % HUES.length]} 80% 45%)`;
        tile.classList.toggle("correct", polytopeIdx === slot);
      }
    });
  }

  private renderFinal(bar: HTMLElement): void {
    const board = this.board;
    if (!board) return;
    const total = board.totalScore;
    const isRecord = this.highScores.update(this.level, board.k, total);
    const best = this.highScores.best(this.level, board.k);
    const banner = document.createElement("div");
    banner.className = "final";
    banner.textContent = `${this.t("final")}: ${total} / ${board.k * board.rounds.length}` +
      `   ${this.t("highScore")}: ${best}` + (isRecord ? `   ${this.t("newRecord")}` : "");
    bar.appendChild(banner);
    bar.appendChild(button(this.t("newGame"), () => this.renderFrontPage()));
  }
}

function labeled(text: string, control: HTMLElement): HTMLLabelElement {
  const label = document.createElement("label");
  label.textContent = text + " ";
  label.appendChild(control);
  return label;
}

function select(options: string[], value: string, onChange: (v: string) => void,
                name: string): HTMLSelectElement {
  const sel = document.createElement("select");
  sel.name = name;
  for (const opt of options) {
    const el = document.createElement("option");
    el.value = el.textContent = opt;
    sel.appendChild(el);
  }
  sel.value = value;
  sel.addEventListener("change", () => onChange(sel.value));
  return sel;
}

function button(text: string, onClick: () => void): HTMLButtonElement {
  const btn = document.createElement("button");
  btn.textContent = text;
  btn.addEventListener("click", onClick);
  return btn;
}

const rootEl = document.getElementById("app");
if (rootEl) {
  new App(rootEl);
}
