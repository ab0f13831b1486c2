import { JsonEngine, type Reply } from './engine.js';
import { render, type Painter } from './render.js';
import { UiSession } from './session.js';

// Engine reached through the dev server's /engine endpoint (serve.ts), which
// forwards each request to the Python bridge process.
class HttpEngine extends JsonEngine {
  constructor(private url: string) {
    super();
  }

  async rpc(req: Record<string, unknown>): Promise<Reply> {
    const res = await fetch(this.url, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(req),
    });
    return (await res.json()) as Reply;
  }
}

class CanvasPainter implements Painter {
  constructor(
    private ctx: CanvasRenderingContext2D,
    private w: number,
    private h: number,
  ) {}

  clear(): void {
    this.ctx.fillStyle = '#ffffff';
    this.ctx.fillRect(0, 0, this.w, this.h);
  }

  line(x1: number, y1: number, x2: number, y2: number, color: string): void {
    this.ctx.strokeStyle = color;
    this.ctx.beginPath();
    this.ctx.moveTo(x1, y1);
    this.ctx.lineTo(x2, y2);
    this.ctx.stroke();
  }

  poly(points: { x: number; y: number }[], stroke: string, fill?: string): void {
    if (points.length === 0) return;
    this.ctx.beginPath();
    this.ctx.moveTo(points[0]!.x, points[0]!.y);
    for (const p of points.slice(1)) this.ctx.lineTo(p.x, p.y);
    this.ctx.closePath();
    if (fill) {
      this.ctx.fillStyle = fill;
      this.ctx.fill();
    }
    this.ctx.strokeStyle = stroke;
    this.ctx.stroke();
  }

  circle(cx: number, cy: number, r: number, stroke: string, fill?: string): void {
    this.ctx.beginPath();
    this.ctx.arc(cx, cy, r, 0, 2 * Math.PI);
    if (fill) {
      this.ctx.fillStyle = fill;
      this.ctx.fill();
    }
    this.ctx.strokeStyle = stroke;
    this.ctx.stroke();
  }

  rect(r: { left: number; top: number; width: number; height: number }, stroke: string, fill?: string): void {
    if (fill) {
      this.ctx.fillStyle = fill;
      this.ctx.fillRect(r.left, r.top, r.width, r.height);
    }
    this.ctx.strokeStyle = stroke;
    this.ctx.strokeRect(r.left, r.top, r.width, r.height);
  }

  text(s: string, x: number, y: number, color: string): void {
    this.ctx.fillStyle = color;
    this.ctx.font = '14px sans-serif';
    this.ctx.textAlign = 'center';
    this.ctx.fillText(s, x, y);
  }
}

const CURSOR_CSS: Record<string, string> = {
  default: 'default',
  hand: 'pointer',
  size_we: 'ew-resize',
  size_ns: 'ns-resize',
  size_all: 'move',
};

const STARTER_SCENE = JSON.stringify(
  {
    objects: [
      {
        kind: 'house',
        number: 1,
        rect: { left: 60, top: 120, width: 140, height: 100 },
        roof_top: { x: 130, y: 70 },
      },
      {
        kind: 'square',
        rect: { left: 280, top: 90, width: 90, height: 90 },
        contour_kind: 'four_node',
      },
      {
        kind: 'rings',
        center: { x: 560, y: 200 },
        rings: [{ r_in: 45, r_out: 75, start_deg: 0, values: [1, 1, 2] }],
        title: { text: 'spin me', offset: { dx: 0, dy: -95 } },
      },
      {
        kind: 'chatoyant',
        points: [
          { x: 180, y: 340 },
          { x: 300, y: 400 },
          { x: 240, y: 500 },
          { x: 120, y: 440 },
        ],
        center: { x: 210, y: 420 },
      },
      {
        kind: 'panel',
        rect: { left: 420, top: 360, width: 200, height: 100 },
        resize: 'any',
        bounds: { min_w: 120, max_w: 360, min_h: 60, max_h: 220 },
      },
    ],
  },
  null,
  2,
);

function download(name: string, text: string): void {
  const blob = new Blob([text], { type: 'text/plain' });
  const a = document.createElement('a');
  a.href = URL.createObjectURL(blob);
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

async function main(): Promise<void> {
  const canvas = document.getElementById('scene') as HTMLCanvasElement;
  const banner = document.getElementById('banner') as HTMLDivElement;
  const ctx = canvas.getContext('2d')!;
  const painter = new CanvasPainter(ctx, canvas.width, canvas.height);

  const engine = new HttpEngine('/engine');
  const session = new UiSession(engine);

  const repaint = async () => {
    const [text, dr] = await Promise.all([engine.save(), engine.drawables()]);
    render(painter, text, dr, session.contoursVisible);
  };
  session.onRepaint(() => void repaint());

  const showBanner = () => {
    banner.textContent = session.errorBanner ?? '';
    banner.style.display = session.errorBanner ? 'block' : 'none';
  };

  await session.loadScene(STARTER_SCENE);
  showBanner();

  const pos = (ev: PointerEvent): [number, number] => {
    const r = canvas.getBoundingClientRect();
    return [ev.clientX - r.left, ev.clientY - r.top];
  };

  canvas.addEventListener('pointerdown', (ev) => {
    ev.preventDefault();
    const [x, y] = pos(ev);
    void session.pointer('down', x, y, ev.button === 2 ? 'R' : 'L');
  });
  canvas.addEventListener('pointermove', (ev) => {
    const [x, y] = pos(ev);
    void session.pointer('move', x, y).then(() => {
      canvas.style.cursor = CURSOR_CSS[session.cursorHint] ?? 'default';
    });
  });
  window.addEventListener('pointerup', () => void session.pointer('up'));
  canvas.addEventListener('contextmenu', (ev) => ev.preventDefault());

  document.getElementById('toggle')!.addEventListener('click', () => {
    session.toggleContours();
  });
  document.getElementById('export')!.addEventListener('click', () => {
    download('session.events', session.exportScript());
  });
  document.getElementById('save')!.addEventListener('click', () => {
    void session.saveScene().then((text) => download('scene.json', text));
  });
  const fileInput = document.getElementById('load') as HTMLInputElement;
  fileInput.addEventListener('change', () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    void file.text().then(async (text) => {
      await session.loadScene(text);
      showBanner();
      fileInput.value = '';
    });
  });
}

void main();
