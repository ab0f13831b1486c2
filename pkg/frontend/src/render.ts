import type {
  Drawables,
  Marker,
  ObjectDoc,
  PtDoc,
  RectDoc,
  SceneDoc,
} from './protocol.js';

// Drawing backend. The canvas shell implements it on a 2D context; tests
// implement it as a call recorder.
export interface Painter {
  clear(): void;
  line(x1: number, y1: number, x2: number, y2: number, color: string): void;
  poly(points: PtDoc[], stroke: string, fill?: string): void;
  circle(cx: number, cy: number, r: number, stroke: string, fill?: string): void;
  rect(r: RectDoc, stroke: string, fill?: string): void;
  text(s: string, x: number, y: number, color: string): void;
}

const BODY_FILL: Record<string, string> = {
  house: '#f3e9d2',
  scale: '#e3efe3',
  square: '#d6e4f0',
  polygon: '#efe0ef',
  chatoyant: '#fdf3d8',
  panel: '#ececec',
};
const BODY_STROKE = '#4a4a4a';

function degPoint(c: PtDoc, r: number, deg: number): PtDoc {
  // screen angles: y grows downward, positive angles go counterclockwise
  const t = (deg * Math.PI) / 180;
  return { x: c.x + r * Math.cos(t), y: c.y - r * Math.sin(t) };
}

function paintBody(p: Painter, obj: ObjectDoc): void {
  switch (obj.kind) {
    case 'house': {
      const { rect, roof_top } = obj;
      p.rect(rect, BODY_STROKE, BODY_FILL.house);
      p.poly(
        [
          { x: rect.left, y: rect.top },
          { x: rect.left + rect.width, y: rect.top },
          roof_top,
        ],
        BODY_STROKE,
        '#d9b382',
      );
      p.text(
        String(obj.number),
        rect.left + rect.width / 2,
        rect.top + rect.height / 2,
        BODY_STROKE,
      );
      break;
    }
    case 'scale': {
      const { cxL, cxR, cyT, cyB } = obj.bounds;
      p.rect(
        { left: cxL, top: cyT, width: cxR - cxL, height: cyB - cyT },
        BODY_STROKE,
        BODY_FILL.scale,
      );
      const mid = (cyT + cyB) / 2;
      p.line(cxL, mid, cxR, mid, BODY_STROKE);
      break;
    }
    case 'square':
      p.rect(obj.rect, BODY_STROKE, BODY_FILL.square);
      break;
    case 'polygon': {
      const pts: PtDoc[] = [];
      for (let k = 0; k < obj.sides; k++) {
        pts.push(degPoint(obj.center, obj.radius, 90 + (360 * k) / obj.sides));
      }
      p.poly(pts, BODY_STROKE, BODY_FILL.polygon);
      break;
    }
    case 'rings': {
      for (const ring of obj.rings) {
        p.circle(obj.center.x, obj.center.y, ring.r_out, BODY_STROKE);
        p.circle(obj.center.x, obj.center.y, ring.r_in, BODY_STROKE);
        const total = ring.values.reduce((a, b) => a + b, 0);
        let acc = 0;
        for (const v of ring.values) {
          const deg = ring.start_deg + (360 * acc) / total;
          const a = degPoint(obj.center, ring.r_in, deg);
          const b = degPoint(obj.center, ring.r_out, deg);
          p.line(a.x, a.y, b.x, b.y, BODY_STROKE);
          acc += v;
        }
      }
      if (obj.title && obj.title.text) {
        p.text(
          obj.title.text,
          obj.center.x + obj.title.offset.dx,
          obj.center.y + obj.title.offset.dy,
          BODY_STROKE,
        );
      }
      break;
    }
    case 'chatoyant':
      p.poly(obj.points, BODY_STROKE, BODY_FILL.chatoyant);
      p.circle(obj.center.x, obj.center.y, 3, BODY_STROKE, BODY_STROKE);
      break;
    case 'panel':
      p.rect(obj.rect, BODY_STROKE, BODY_FILL.panel);
      break;
  }
}

function paintMarker(p: Painter, m: Marker, color: string): void {
  // clearance nodes read as hollow: white inside the colored outline
  const fill = m.clear ? '#ffffff' : color;
  if (m.shape === 'square') {
    p.rect(
      { left: m.x - m.size, top: m.y - m.size, width: 2 * m.size, height: 2 * m.size },
      color,
      fill,
    );
  } else {
    p.circle(m.x, m.y, m.size, color, fill);
  }
}

/**
 * Paint one frame: object bodies deepest-first, then, when contours are
 * shown, every contour layer on top in the engine's contour color.
 *
 * `dr.order[i]` names the scene object whose contour is `dr.layers[i]`; both
 * run back to front, so the walk below keeps bodies and overlays stacked
 * identically.
 */
export function render(
  p: Painter,
  sceneText: string,
  dr: Drawables,
  contoursVisible: boolean,
): void {
  const doc = JSON.parse(sceneText) as SceneDoc;
  p.clear();
  for (const sceneIdx of dr.order) {
    const obj = doc.objects[sceneIdx];
    if (obj) paintBody(p, obj);
  }
  if (!contoursVisible) return;
  for (const layer of dr.layers) {
    for (const [x1, y1, x2, y2] of layer.segments) {
      p.line(x1, y1, x2, y2, dr.color);
    }
    for (const m of layer.markers) paintMarker(p, m, dr.color);
  }
}
