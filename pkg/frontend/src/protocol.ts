// Wire types shared between the UI and the engine bridge, plus the shape of
// the scene documents it saves. The UI never derives hits or constraints from
// these documents; they are read only to paint object bodies.

export type Button = 'L' | 'R';
export type PointerKind = 'down' | 'move' | 'up';

export interface Marker {
  x: number;
  y: number;
  shape: 'square' | 'circle';
  size: number;
  clear: boolean;
}

export interface Layer {
  segments: [number, number, number, number][];
  markers: Marker[];
}

// Layers arrive back-to-front (deepest first); order[i] is the scene-document
// index of the object whose contour is layers[i], so body paint and overlay
// paint walk the same sequence.
export interface Drawables {
  color: string;
  layers: Layer[];
  order: number[];
}

export interface PtDoc {
  x: number;
  y: number;
}

export interface RectDoc {
  left: number;
  top: number;
  width: number;
  height: number;
}

export interface HouseDoc {
  kind: 'house';
  number: number;
  rect: RectDoc;
  roof_top: PtDoc;
}

export interface ScaleDoc {
  kind: 'scale';
  bounds: { cxL: number; cxR: number; cyT: number; cyB: number };
  shift: number;
  variant: 'frame' | 'midline';
}

export interface SquareDoc {
  kind: 'square';
  rect: RectDoc;
}

export interface PolygonDoc {
  kind: 'polygon';
  center: PtDoc;
  radius: number;
  sides: number;
}

export interface RingDoc {
  r_in: number;
  r_out: number;
  start_deg: number;
  values: number[];
}

export interface RingsDoc {
  kind: 'rings';
  center: PtDoc;
  rings: RingDoc[];
  title?: { text: string; offset: { dx: number; dy: number } };
}

export interface ChatoyantDoc {
  kind: 'chatoyant';
  points: PtDoc[];
  center: PtDoc;
}

export interface PanelDoc {
  kind: 'panel';
  rect: RectDoc;
}

export type ObjectDoc =
  | HouseDoc
  | ScaleDoc
  | SquareDoc
  | PolygonDoc
  | RingsDoc
  | ChatoyantDoc
  | PanelDoc;

export interface SceneDoc {
  objects: ObjectDoc[];
}
