package dlib;

import java.util.*;

public class KeyboardBuffer extends BaseObject
{
    private Vector queued;
    private int limit;
    private boolean echo;

    public KeyboardBuffer (int limit)
    {
        queued = new Vector();
        this.limit = limit;
        echo = false;
    }

    public boolean offer (char key)
    {
        if (queued.size() >= limit)
        {
            return( false );
        }
        queued.addElement(new Character(key));
        if (echo)
        {
            System.out.print(key);
        }
        return( true );
    }

    public int take ()
    {
        if (queued.isEmpty())
        {
            return( -1 );
        }
        Character first = (Character) queued.firstElement();
        queued.removeElementAt(0);
        return( first.charValue() );
    }

    public void setEcho (boolean wanted)
    {
        echo = wanted;
    }

    public int waiting ()
    {
        return( queued.size() );
    }

    public void drain ()
    {
        while (take() >= 0)
        {
        }
    }
}
